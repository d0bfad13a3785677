#include "lamina/equivalence.hpp"

#include <algorithm>

#include "doctest.h"
#include "test_util.hpp"

using namespace lamina;
using testutil::ang;
using testutil::chord;

namespace {

std::vector<Angle> angles(std::initializer_list<std::pair<long long, long long>> pairs) {
  std::vector<Angle> out;
  for (const auto& [num, den] : pairs) out.push_back(ang(num, den));
  return out;
}

Lamination rabbit_pair() {
  return Lamination(2, {chord(1, 7, 2, 7), chord(2, 7, 4, 7), chord(1, 7, 4, 7),
                        chord(1, 14, 9, 14), chord(9, 14, 11, 14),
                        chord(1, 14, 11, 14)});
}

// Depth-2 rabbit tower: the two seed triangles plus their generation-2 siblings.
Lamination rabbit_depth2() {
  return Lamination(
      2, {chord(4, 28, 8, 28), chord(8, 28, 16, 28), chord(4, 28, 16, 28),
          chord(2, 28, 18, 28), chord(18, 28, 22, 28), chord(2, 28, 22, 28),
          chord(1, 28, 23, 28), chord(23, 28, 25, 28), chord(1, 28, 25, 28),
          chord(9, 28, 11, 28), chord(11, 28, 15, 28), chord(9, 28, 15, 28)});
}

// Collapsing quadrilateral over {5/12,7/12} with its chain down to the fixed leaf.
Partition quad_partition() {
  return Partition({angles({{5, 24}, {7, 24}, {17, 24}, {19, 24}}),
                    angles({{5, 12}, {7, 12}}), angles({{1, 12}, {11, 12}}),
                    angles({{1, 6}, {5, 6}}), angles({{1, 3}, {2, 3}})});
}

Lamination split_fixture() {
  Lamination base = q_lamination_from(2, quad_partition());
  std::vector<Chord> leaves = base.leaves();
  leaves.push_back(chord(5, 24, 17, 24));
  return Lamination(2, std::move(leaves));
}

}  // namespace

TEST_CASE("partition normalizes and rejects overlap") {
  Partition part({angles({{2, 7}, {1, 7}}), angles({{1, 2}})});
  REQUIRE(part.classes().size() == 2);
  CHECK(part.classes()[0] == angles({{1, 7}, {2, 7}}));
  CHECK(part.classes()[1] == angles({{1, 2}}));
  CHECK(part.universe().size() == 3);
  CHECK(*part.class_of(ang(2, 7)) == angles({{1, 7}, {2, 7}}));
  CHECK(part.class_of(ang(1, 3)) == nullptr);

  CHECK_THROWS_AS(Partition({angles({{1, 7}, {2, 7}}), angles({{2, 7}, {1, 2}})}),
                  std::invalid_argument);
  CHECK_THROWS_AS(Partition(std::vector<std::vector<Angle>>{{}}),
                  std::invalid_argument);
}

TEST_CASE("finite classes are endpoint graph components") {
  const Partition rabbit = finite_classes(
      Lamination(2, {chord(1, 7, 2, 7), chord(2, 7, 4, 7), chord(1, 7, 4, 7)}));
  REQUIRE(rabbit.classes().size() == 1);
  CHECK(rabbit.classes()[0] == angles({{1, 7}, {2, 7}, {4, 7}}));

  const Partition pair =
      finite_classes(Lamination(2, {chord(0, 1, 1, 4), chord(1, 2, 3, 4)}));
  REQUIRE(pair.classes().size() == 2);
  CHECK(pair.classes()[0] == angles({{0, 1}, {1, 4}}));
  CHECK(pair.classes()[1] == angles({{1, 2}, {3, 4}}));

  const Partition chain =
      finite_classes(Lamination(2, {chord(0, 1, 1, 4), chord(1, 4, 1, 2)}));
  REQUIRE(chain.classes().size() == 1);
  CHECK(chain.classes()[0] == angles({{0, 1}, {1, 4}, {1, 2}}));

  CHECK(finite_classes(Lamination(2, {})).classes().empty());
}

TEST_CASE("equivalence check accepts rotating and mapped-on classes") {
  const EquivalenceReport rabbit =
      check_laminational_equivalence(2, Partition({angles({{1, 7}, {2, 7}, {4, 7}})}));
  CHECK(*rabbit.e2_unlinked);
  CHECK(*rabbit.d1_forward);
  CHECK(*rabbit.d3_covering);
  CHECK(*rabbit.d4_finite);
  CHECK(rabbit.passed());
  CHECK(std::any_of(rabbit.notes.begin(), rabbit.notes.end(), [](const std::string& n) {
    return n.find("E1") != std::string::npos;
  }));

  const EquivalenceReport mapped = check_laminational_equivalence(
      2, Partition({angles({{1, 3}, {2, 3}}), angles({{1, 6}, {5, 6}})}));
  CHECK(mapped.passed());
}

TEST_CASE("equivalence check rejects linked hulls") {
  const EquivalenceReport report = check_laminational_equivalence(
      2, Partition({angles({{0, 1}, {1, 2}}), angles({{1, 4}, {3, 4}})}));
  REQUIRE_FALSE(*report.e2_unlinked);
  REQUIRE(report.witnesses.count("e2_unlinked"));
  CHECK(report.witnesses.at("e2_unlinked")[0] == "{0 1/2} x {1/4 3/4}");
  CHECK_FALSE(report.passed());
}

TEST_CASE("equivalence check requires class images to be classes") {
  const EquivalenceReport collapse =
      check_laminational_equivalence(2, Partition({angles({{0, 1}, {1, 2}})}));
  REQUIRE_FALSE(*collapse.d1_forward);
  CHECK(collapse.witnesses.at("d1_forward")[0] ==
        "class {0 1/2} -> image {0} is not a class");

  // Image escapes the universe: D1 is relativized, not failed.
  const EquivalenceReport open_orbit =
      check_laminational_equivalence(2, Partition({angles({{1, 5}, {2, 5}})}));
  CHECK(*open_orbit.d1_forward);
  CHECK(open_orbit.passed());
  CHECK(std::any_of(open_orbit.notes.begin(), open_orbit.notes.end(),
                    [](const std::string& n) {
                      return n.find("not forward closed") != std::string::npos;
                    }));

  // Image is an out-of-universe point: an implicit singleton class, no marker.
  const EquivalenceReport leafward =
      check_laminational_equivalence(2, Partition({angles({{1, 4}, {3, 4}})}));
  CHECK(*leafward.d1_forward);
  CHECK(std::none_of(leafward.notes.begin(), leafward.notes.end(),
                     [](const std::string& n) {
                       return n.find("not forward closed") != std::string::npos;
                     }));
}

TEST_CASE("equivalence check enforces the consecutive arc condition") {
  const EquivalenceReport bad =
      check_laminational_equivalence(2, Partition({angles({{0, 1}, {1, 4}, {1, 2}})}));
  REQUIRE_FALSE(*bad.d3_covering);
  REQUIRE(bad.witnesses.count("d3_covering"));
  CHECK(bad.witnesses.at("d3_covering")[0].find("arc (1/2 0)") != std::string::npos);

  // A collapsing quadrilateral covers its degenerate image twice; D3 holds.
  const EquivalenceReport quad = check_laminational_equivalence(
      2, Partition({angles({{1, 14}, {2, 14}, {8, 14}, {9, 14}})}));
  CHECK(*quad.d3_covering);
  CHECK(quad.passed());
}

TEST_CASE("q-lamination construction emits hull edges") {
  const Lamination triangle =
      q_lamination_from(2, Partition({angles({{1, 7}, {2, 7}, {4, 7}})}));
  CHECK(triangle.leaves() ==
        std::vector<Chord>{chord(1, 7, 2, 7), chord(1, 7, 4, 7), chord(2, 7, 4, 7)});

  const Lamination single = q_lamination_from(2, Partition({angles({{1, 3}, {2, 3}})}));
  CHECK(single.leaves() == std::vector<Chord>{chord(1, 3, 2, 3)});

  const Lamination quad = q_lamination_from(
      2, Partition({angles({{1, 14}, {2, 14}, {8, 14}, {9, 14}})}));
  CHECK(quad.leaves() ==
        std::vector<Chord>{chord(1, 14, 2, 14), chord(1, 14, 9, 14),
                           chord(2, 14, 8, 14), chord(8, 14, 9, 14)});

  const Lamination pair = q_lamination_from(
      2, Partition({angles({{1, 7}, {2, 7}, {4, 7}}),
                    angles({{1, 14}, {9, 14}, {11, 14}})}));
  CHECK(pair.leaves() == rabbit_pair().leaves());

  CHECK_THROWS_AS(q_lamination_from(2, Partition({angles({{0, 1}, {1, 2}}),
                                                  angles({{1, 4}, {3, 4}})})),
                  std::runtime_error);
}

TEST_CASE("q-lamination recognition") {
  CHECK(is_q_lamination(rabbit_pair()).value);
  CHECK(is_q_lamination(rabbit_depth2()).value);

  const Lamination quad_qlam = q_lamination_from(2, quad_partition());
  REQUIRE(quad_qlam.size() == 8);
  CHECK(is_q_lamination(quad_qlam).value);
  // Emitted classes reproduce the input partition.
  const Partition re = finite_classes(quad_qlam);
  CHECK(re.classes() == quad_partition().classes());

  const WitnessedBool split = is_q_lamination(split_fixture());
  REQUIRE_FALSE(split.value);
  CHECK(std::any_of(split.witnesses.begin(), split.witnesses.end(),
                    [](const std::string& w) {
                      return w.find("interior leaf 5/24 17/24") != std::string::npos;
                    }));

  const WitnessedBool crossing =
      is_q_lamination(Lamination(2, {chord(0, 1, 1, 2), chord(1, 4, 3, 4)}));
  REQUIRE_FALSE(crossing.value);
  CHECK(crossing.witnesses[0].find("crossing leaves") != std::string::npos);
}

TEST_CASE("critical splitting by a leaf") {
  const SplittingVerdict none = critical_splitting(rabbit_depth2());
  CHECK(none.kind == SplittingVerdict::Kind::none);

  const SplittingVerdict split = critical_splitting(split_fixture());
  REQUIRE(split.kind == SplittingVerdict::Kind::leaf_splitting);
  REQUIRE(split.witness_chords.size() == 1);
  CHECK(split.witness_chords[0] == chord(5, 24, 17, 24));
  CHECK(split.critical_class == angles({{5, 24}, {7, 24}, {17, 24}, {19, 24}}));

  // Critical diameter inserted into the depth-2 rabbit merges two triangles
  // into one critical class and splits it.
  std::vector<Chord> leaves = rabbit_depth2().leaves();
  leaves.push_back(chord(1, 14, 4, 7));
  const SplittingVerdict diameter = critical_splitting(Lamination(2, leaves));
  REQUIRE(diameter.kind == SplittingVerdict::Kind::leaf_splitting);
  CHECK(diameter.witness_chords[0] == chord(1, 14, 4, 7));
  CHECK(diameter.critical_class ==
        angles({{1, 14}, {1, 7}, {2, 7}, {4, 7}, {9, 14}, {11, 14}}));

  CHECK_THROWS_AS(critical_splitting(Lamination(3, {})), std::invalid_argument);
}

TEST_CASE("critical splitting by a quadrilateral") {
  std::vector<Chord> leaves = rabbit_depth2().leaves();
  leaves.push_back(chord(1, 14, 1, 7));
  leaves.push_back(chord(4, 7, 9, 14));
  const Lamination lam(2, leaves);

  const SplittingVerdict verdict = critical_splitting(lam);
  REQUIRE(verdict.kind == SplittingVerdict::Kind::quadrilateral_splitting);
  REQUIRE(verdict.witness_chords.size() == 4);
  CHECK(verdict.witness_chords ==
        std::vector<Chord>{chord(1, 14, 1, 7), chord(1, 7, 4, 7),
                           chord(4, 7, 9, 14), chord(1, 14, 9, 14)});
  CHECK(verdict.critical_class ==
        angles({{1, 14}, {1, 7}, {2, 7}, {4, 7}, {9, 14}, {11, 14}}));
}

TEST_CASE("classify aggregates all flags consistently") {
  const ClassificationReport rabbit = classify(rabbit_pair());
  CHECK(*rabbit.unlinked_ok);
  CHECK(*rabbit.sibling_invariant);
  CHECK(*rabbit.thurston_invariant);
  CHECK(*rabbit.proper);
  CHECK(*rabbit.clean);
  CHECK(*rabbit.q_lamination);
  CHECK(rabbit.internal_errors.empty());
  CHECK(std::any_of(rabbit.notes.begin(), rabbit.notes.end(), [](const std::string& n) {
    return n == "critical splitting: none";
  }));

  const ClassificationReport star = classify(
      Lamination(2, {chord(0, 1, 1, 4), chord(0, 1, 1, 2), chord(0, 1, 3, 4)}));
  CHECK_FALSE(*star.clean);
  CHECK(star.witnesses.at("clean") == std::vector<std::string>{"0"});
  CHECK_FALSE(*star.proper);
  CHECK_FALSE(*star.sibling_invariant);
  CHECK_FALSE(*star.thurston_invariant);
  CHECK_FALSE(*star.q_lamination);
  CHECK(star.internal_errors.empty());

  const ClassificationReport split = classify(split_fixture());
  CHECK(*split.sibling_invariant);
  CHECK(*split.proper);
  CHECK_FALSE(*split.q_lamination);
  CHECK(split.internal_errors.empty());
  CHECK(std::any_of(split.notes.begin(), split.notes.end(), [](const std::string& n) {
    return n.find("critical splitting: leaf 5/24 17/24") != std::string::npos;
  }));
}
