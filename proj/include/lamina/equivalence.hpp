#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lamina/lamination.hpp"

namespace lamina {

// Finite collection of pairwise disjoint nonempty angle sets. Angles outside
// the universe are implicitly singleton classes.
class Partition {
 public:
  explicit Partition(std::vector<std::vector<Angle>> classes);

  const std::vector<std::vector<Angle>>& classes() const { return classes_; }
  const std::set<Angle>& universe() const { return universe_; }

  // The listed class containing x, if any.
  const std::vector<Angle>* class_of(const Angle& x) const;

 private:
  std::vector<std::vector<Angle>> classes_;
  std::set<Angle> universe_;
};

struct EquivalenceReport {
  std::optional<bool> e2_unlinked;
  std::optional<bool> d1_forward;
  std::optional<bool> d3_covering;
  std::optional<bool> d4_finite;
  std::map<std::string, std::vector<std::string>> witnesses;
  std::vector<std::string> notes;

  bool passed() const;
};

// Connected components of the leaf endpoint graph.
Partition finite_classes(const Lamination& lam);

EquivalenceReport check_laminational_equivalence(int degree, const Partition& part);

// Hull edges of the multi-point classes. Throws if the equivalence check fails.
Lamination q_lamination_from(int degree, const Partition& part);

WitnessedBool is_q_lamination(const Lamination& lam);

// Degree 2 only: how an added critical chord splits a class hull.
struct SplittingVerdict {
  enum class Kind { none, leaf_splitting, quadrilateral_splitting };
  Kind kind = Kind::none;
  std::vector<Chord> witness_chords;
  std::vector<Angle> critical_class;
};

SplittingVerdict critical_splitting(const Lamination& lam);

ClassificationReport classify(const Lamination& lam);

}  // namespace lamina
