#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lamina/chord.hpp"

namespace lamina {

// Finite set of pairwise non-crossing leaves under one degree. The constructor
// sorts and dedups but does not reject crossings; validate() reports them.
class Lamination {
 public:
  Lamination(int degree, std::vector<Chord> leaves);

  int degree() const { return degree_; }
  const std::vector<Chord>& leaves() const { return leaves_; }
  bool contains(const Chord& leaf) const;
  bool empty() const { return leaves_.empty(); }
  std::size_t size() const { return leaves_.size(); }

  friend bool operator==(const Lamination&, const Lamination&) = default;

 private:
  int degree_;
  std::vector<Chord> leaves_;
};

// Leaves exempt from backward-looking checks; tops of truncated pullback towers.
struct SiblingFrontier {
  std::set<Chord> frontier;
};

struct ClassificationReport {
  std::optional<bool> unlinked_ok;
  std::optional<bool> forward_invariant;
  std::optional<bool> backward_invariant_relative;
  std::optional<bool> sibling_invariant;
  std::optional<bool> thurston_invariant;
  std::optional<bool> proper;
  std::optional<bool> clean;
  std::optional<bool> q_lamination;
  // Keyed by the flag name; every false flag carries at least one witness.
  std::map<std::string, std::vector<std::string>> witnesses;
  std::vector<std::string> notes;
  std::vector<std::string> internal_errors;
};

// One boundary item of a gap: a leaf, or the counterclockwise circle arc
// between consecutive boundary leaves (a single point when from == to).
struct GapSide {
  Angle from, to;
  bool is_leaf = false;
  friend bool operator==(const GapSide&, const GapSide&) = default;
  friend std::strong_ordering operator<=>(const GapSide&, const GapSide&) = default;
};

// A face of the disk subdivision, walked counterclockwise (interior on the
// left), rotated to start at its smallest side.
struct Gap {
  std::vector<GapSide> boundary;
  std::vector<Angle> vertices;
  bool whole_disk() const { return boundary.size() == 1 && !boundary[0].is_leaf; }
  friend bool operator==(const Gap&, const Gap&) = default;
};

struct GapImageVerdict {
  enum class Kind { point, leaf, gap, fail };
  Kind kind = Kind::fail;
  std::optional<Angle> point;
  std::optional<Chord> leaf;
  long long covering_degree = 0;
  std::string witness;
};

struct CollapsingComponent {
  enum class Kind { leaf, polygon };
  Kind kind = Kind::leaf;
  std::vector<Angle> vertices;
  std::vector<Chord> members;
  std::vector<Chord> hull_edges;
};

// Two distinct leaves at a common vertex with equal non-degenerate images.
struct CriticalWedge {
  Angle vertex;
  Chord leaf1, leaf2;
  friend bool operator==(const CriticalWedge&, const CriticalWedge&) = default;
  friend std::strong_ordering operator<=>(const CriticalWedge&, const CriticalWedge&) = default;
};

struct WitnessedBool {
  bool value = false;
  std::vector<std::string> witnesses;
  explicit operator bool() const { return value; }
};

// unlinked_ok plus one witness per crossing pair.
ClassificationReport validate(const Lamination& lamination);

// All sets of `degree` pairwise disjoint chords joining preimages of m.a()
// to preimages of m.b(); always Catalan(degree) many collections.
std::vector<std::vector<Chord>> full_preimage_collections(int degree, const Chord& m);

// Full collections through `ell` drawn entirely from leaves of L.
std::vector<std::vector<Chord>> sibling_collections(const Lamination& lamination,
                                                    const Chord& ell);

// Leaves of L with no preimage leaf in L.
SiblingFrontier auto_frontier(const Lamination& lamination);

ClassificationReport check_sibling_invariant(const Lamination& lamination);
ClassificationReport check_sibling_invariant(const Lamination& lamination,
                                             const SiblingFrontier& frontier);

// The |leaves| + 1 faces of the disk cut along the leaves.
std::vector<Gap> gaps(const Lamination& lamination);

GapImageVerdict check_gap_invariance(const Lamination& lamination, const Gap& gap);

ClassificationReport check_thurston(const Lamination& lamination);
ClassificationReport check_thurston(const Lamination& lamination,
                                    const SiblingFrontier& frontier);

// Connected components of the leaves of L mapping onto m; each is a single
// leaf or a collapsing polygon, anything else throws.
std::vector<CollapsingComponent> collapsing_components(const Lamination& lamination,
                                                       const Chord& m);

std::vector<CriticalWedge> critical_wedges(const Lamination& lamination);

// False iff a critical leaf has a periodic endpoint or a wedge a periodic vertex.
WitnessedBool is_proper(const Lamination& lamination);

// False iff some circle point lies on three or more leaves.
WitnessedBool is_clean(const Lamination& lamination);

// Hulls of circle point sets are disjoint iff the sets share no point and one
// lies inside a single complementary arc of the other.
bool convex_hulls_disjoint(std::vector<Angle> a_pts, std::vector<Angle> b_pts);

// True iff the convex hulls of sigma^m(P), 0 <= m <= depth, are pairwise disjoint.
bool is_wandering(int degree, const std::vector<Angle>& points, int depth);

Rational hausdorff_distance(const Lamination& l1, const Lamination& l2);

}  // namespace lamina
