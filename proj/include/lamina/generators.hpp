#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lamina/lamination.hpp"

namespace lamina {

// Choice data resolving preimage ambiguity: critical chords, pairwise
// non-crossing, with total criticality degree - 1.
class CriticalPortrait {
 public:
  CriticalPortrait(int degree, std::vector<Chord> chords);

  int degree() const { return degree_; }
  const std::vector<Chord>& chords() const { return chords_; }

 private:
  int degree_;
  std::vector<Chord> chords_;
};

struct PullbackSpec {
  Lamination seed;  // forward invariant, non-crossing
  CriticalPortrait portrait;
  int depth = 0;
  bool include_portrait = false;
};

struct PullbackResult {
  Lamination lamination;
  // Pullback round that introduced each leaf: seed 0, portrait chords -1.
  std::map<Chord, int> generation;
  SiblingFrontier frontier;
};

PullbackResult pullback(const PullbackSpec& spec);

struct GapfreeFamily {
  Lamination lamination;
  bool sawtooth_ok = false;
  // One "t -> u" or "t -> collapse v" line per leaf parameter t in (0, 1/2).
  std::vector<std::string> parameter_map;
};

// Leaves {t, 1-t}, t = k/(2 degree^depth); the induced parameter dynamics is
// the degree-sawtooth discretization.
GapfreeFamily gapfree_family(int degree, int depth);

struct HexagonExample {
  Lamination lamination;
  Lamination base;       // lamination minus the inserted leaves
  Chord witness;         // the inserted short diagonal; no full sibling collection
  std::vector<Chord> inserted;
  std::string provenance;
};

// Committed degree-3 fixture: thurston invariant but not sibling invariant.
HexagonExample hexagon_example();

// Re-runs the bounded search that produced the fixture. Degree must be 3.
std::optional<HexagonExample> hexagon_search(int degree, long long max_den);

struct ConvergingTuples {
  std::vector<std::vector<Chord>> collections;
  std::vector<Chord> limit;
  std::vector<Chord> images;  // image chord of collections[k]
};

// Full preimage collections converging chord-wise to a full preimage
// collection of limit_image.
ConvergingTuples converging_sibling_tuples(int degree, const Chord& limit_image,
                                           int count);

std::vector<std::string> preset_names();
PullbackResult presets(const std::string& name, int depth);

}  // namespace lamina
