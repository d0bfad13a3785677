#include "lamina/lamination.hpp"

#include <algorithm>
#include <set>

#include "doctest.h"
#include "test_util.hpp"

using namespace lamina;
using testutil::ang;
using testutil::chord;

namespace {

Lamination rabbit_triangle() {
  return Lamination(2, {chord(1, 7, 2, 7), chord(2, 7, 4, 7), chord(1, 7, 4, 7)});
}

// Rabbit triangle plus its sibling triangle {1/14, 9/14, 11/14}.
Lamination rabbit_pair() {
  return Lamination(2, {chord(1, 7, 2, 7), chord(2, 7, 4, 7), chord(1, 7, 4, 7),
                        chord(1, 14, 9, 14), chord(9, 14, 11, 14),
                        chord(1, 14, 11, 14)});
}

// Collapsing quadrilateral {1/14, 2/14, 8/14, 9/14} plus its image leaf.
Lamination quad_lamination() {
  return Lamination(2, {chord(1, 14, 1, 7), chord(1, 7, 4, 7), chord(4, 7, 9, 14),
                        chord(1, 14, 9, 14), chord(1, 7, 2, 7)});
}

// Independent oracle: all bijections between the two preimage fibers,
// filtered to pairwise non-crossing chord sets.
std::set<std::vector<Chord>> collections_by_permutations(int d, const Chord& m) {
  const std::vector<Angle> a_pts = preimages(d, m.a());
  std::vector<Angle> b_pts = preimages(d, m.b());
  std::sort(b_pts.begin(), b_pts.end());
  std::set<std::vector<Chord>> out;
  do {
    std::vector<Chord> collection;
    for (int i = 0; i < d; ++i) collection.emplace_back(a_pts[i], b_pts[i]);
    bool ok = true;
    for (std::size_t i = 0; ok && i < collection.size(); ++i)
      for (std::size_t j = i + 1; ok && j < collection.size(); ++j) {
        if (crosses(collection[i], collection[j])) ok = false;
        if (collection[i].has_endpoint(collection[j].a()) ||
            collection[i].has_endpoint(collection[j].b()))
          ok = false;
      }
    if (ok) {
      std::sort(collection.begin(), collection.end());
      out.insert(collection);
    }
  } while (std::next_permutation(b_pts.begin(), b_pts.end()));
  return out;
}

const Gap* find_gap(const std::vector<Gap>& faces, const std::vector<Angle>& vertices) {
  for (const Gap& g : faces)
    if (g.vertices.size() == vertices.size() &&
        std::set<Angle>(g.vertices.begin(), g.vertices.end()) ==
            std::set<Angle>(vertices.begin(), vertices.end()))
      return &g;
  return nullptr;
}

}  // namespace

TEST_CASE("lamination constructor sorts and dedups") {
  const Lamination l(2, {chord(2, 7, 4, 7), chord(1, 7, 2, 7), chord(1, 7, 2, 7)});
  CHECK(l.size() == 2);
  CHECK(l.leaves() == std::vector<Chord>{chord(1, 7, 2, 7), chord(2, 7, 4, 7)});
  CHECK(l.contains(chord(1, 7, 2, 7)));
  CHECK_FALSE(l.contains(chord(1, 7, 4, 7)));
  CHECK_THROWS_AS(Lamination(1, {}), std::invalid_argument);
}

TEST_CASE("validate reports crossing pairs") {
  CHECK(*validate(rabbit_triangle()).unlinked_ok);
  CHECK(*validate(Lamination(2, {})).unlinked_ok);

  const auto report = validate(Lamination(2, {chord(0, 1, 1, 2), chord(1, 4, 3, 4)}));
  CHECK_FALSE(*report.unlinked_ok);
  CHECK(report.witnesses.at("unlinked_ok") ==
        std::vector<std::string>{"0 1/2 x 1/4 3/4"});
}

TEST_CASE("full_preimage_collections frozen examples") {
  const auto two = full_preimage_collections(2, chord(1, 3, 2, 3));
  REQUIRE(two.size() == 2);
  CHECK(two[0] == std::vector<Chord>{chord(1, 6, 1, 3), chord(2, 3, 5, 6)});
  CHECK(two[1] == std::vector<Chord>{chord(1, 6, 5, 6), chord(1, 3, 2, 3)});

  const auto half = full_preimage_collections(2, chord(0, 1, 1, 2));
  REQUIRE(half.size() == 2);
  CHECK(half[0] == std::vector<Chord>{chord(0, 1, 1, 4), chord(1, 2, 3, 4)});
  CHECK(half[1] == std::vector<Chord>{chord(0, 1, 3, 4), chord(1, 4, 1, 2)});

  CHECK(full_preimage_collections(3, chord(1, 4, 3, 4)).size() == 5);

  // The image chord may well be critical as a leaf; only its own endpoints
  // must be distinct.
  const auto crit = full_preimage_collections(2, chord(1, 4, 3, 4));
  REQUIRE(crit.size() == 2);
  CHECK(crit[0] == std::vector<Chord>{chord(1, 8, 3, 8), chord(5, 8, 7, 8)});
  CHECK(crit[1] == std::vector<Chord>{chord(1, 8, 7, 8), chord(3, 8, 5, 8)});
}

TEST_CASE("full_preimage_collections matches the permutation oracle") {
  std::mt19937 rng(7040);
  const auto pool = testutil::angle_pool(60);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  const long long expected[] = {0, 0, 2, 5, 14};
  for (int d : {2, 3, 4}) {
    int tested = 0;
    while (tested < 12) {
      const Angle a = pool[pick(rng)], b = pool[pick(rng)];
      if (a == b) continue;
      const Chord m(a, b);
      if (is_critical(d, m)) continue;
      ++tested;
      const auto got = full_preimage_collections(d, m);
      CHECK(static_cast<long long>(got.size()) == expected[d]);
      CHECK(std::set<std::vector<Chord>>(got.begin(), got.end()) ==
            collections_by_permutations(d, m));
      for (const auto& collection : got) {
        for (const Chord& c : collection)
          CHECK(chord_image(d, c) == ChordOrPoint(m));
        for (std::size_t i = 0; i < collection.size(); ++i)
          for (std::size_t j = i + 1; j < collection.size(); ++j) {
            CHECK_FALSE(crosses(collection[i], collection[j]));
            CHECK_FALSE(collection[i].has_endpoint(collection[j].a()));
            CHECK_FALSE(collection[i].has_endpoint(collection[j].b()));
          }
      }
    }
  }
}

TEST_CASE("sibling_collections filters to leaves of L") {
  const auto found = sibling_collections(rabbit_pair(), chord(1, 7, 2, 7));
  REQUIRE(found.size() == 1);
  CHECK(found[0] == std::vector<Chord>{chord(1, 7, 2, 7), chord(9, 14, 11, 14)});

  CHECK(sibling_collections(rabbit_triangle(), chord(1, 7, 2, 7)).empty());
  CHECK_THROWS_AS(sibling_collections(rabbit_triangle(), chord(1, 7, 3, 7)),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      sibling_collections(Lamination(2, {chord(1, 4, 3, 4)}), chord(1, 4, 3, 4)),
      std::invalid_argument);
}

TEST_CASE("auto_frontier collects leaves with no preimage leaf") {
  const auto frontier = auto_frontier(rabbit_pair()).frontier;
  CHECK(frontier == std::set<Chord>{chord(1, 14, 9, 14), chord(9, 14, 11, 14),
                                    chord(1, 14, 11, 14)});
  CHECK(auto_frontier(rabbit_triangle()).frontier.empty());
}

TEST_CASE("check_sibling_invariant") {
  const auto good = check_sibling_invariant(rabbit_pair());
  CHECK(*good.unlinked_ok);
  CHECK(*good.forward_invariant);
  CHECK(*good.backward_invariant_relative);
  CHECK(*good.sibling_invariant);

  const auto bad = check_sibling_invariant(rabbit_triangle());
  CHECK(*bad.forward_invariant);
  CHECK(*bad.backward_invariant_relative);
  CHECK_FALSE(*bad.sibling_invariant);
  CHECK(bad.witnesses.at("sibling_invariant") ==
        std::vector<std::string>{"1/7 2/7", "1/7 4/7", "2/7 4/7"});

  CHECK(*check_sibling_invariant(Lamination(2, {chord(1, 4, 3, 4)})).sibling_invariant);

  const auto forced = check_sibling_invariant(rabbit_pair(), SiblingFrontier{});
  CHECK_FALSE(*forced.backward_invariant_relative);
  CHECK(forced.witnesses.at("backward_invariant_relative").size() == 3);

  CHECK_THROWS_AS(
      check_sibling_invariant(rabbit_triangle(), SiblingFrontier{{chord(0, 1, 1, 2)}}),
      std::invalid_argument);
}

TEST_CASE("gaps of a single leaf are two half-disks") {
  const auto faces = gaps(Lamination(2, {chord(0, 1, 1, 2)}));
  REQUIRE(faces.size() == 2);
  CHECK(faces[0].boundary ==
        std::vector<GapSide>{{Angle(), ang(1, 2), false}, {ang(1, 2), Angle(), true}});
  CHECK(faces[0].vertices == std::vector<Angle>{Angle(), ang(1, 2)});
  CHECK(faces[1].boundary ==
        std::vector<GapSide>{{Angle(), ang(1, 2), true}, {ang(1, 2), Angle(), false}});
  CHECK(faces[1].vertices == std::vector<Angle>{Angle(), ang(1, 2)});
}

TEST_CASE("gaps of the empty lamination") {
  const auto faces = gaps(Lamination(2, {}));
  REQUIRE(faces.size() == 1);
  CHECK(faces[0].whole_disk());
}

TEST_CASE("gap structure invariants") {
  std::mt19937 rng(555);
  std::vector<Lamination> samples{rabbit_pair(), quad_lamination(), rabbit_triangle()};
  for (int i = 0; i < 20; ++i)
    samples.push_back(testutil::random_lamination(rng, 2 + i % 3, 3 + i % 13, 60));

  for (const Lamination& l : samples) {
    const auto faces = gaps(l);
    CHECK(faces.size() == l.size() + 1);

    std::map<Chord, int> border_count;
    for (const Gap& g : faces) {
      REQUIRE(!g.boundary.empty());
      for (std::size_t i = 0; i < g.boundary.size(); ++i) {
        const GapSide& cur = g.boundary[i];
        const GapSide& next = g.boundary[(i + 1) % g.boundary.size()];
        CHECK(cur.to == next.from);
        if (g.boundary.size() > 1) CHECK(cur.is_leaf != next.is_leaf);
        if (cur.is_leaf) ++border_count[Chord(cur.from, cur.to)];
      }
    }
    for (const Chord& leaf : l.leaves()) CHECK(border_count[leaf] == 2);
  }
}

TEST_CASE("check_gap_invariance verdicts") {
  const Lamination pair = rabbit_pair();
  const auto pair_faces = gaps(pair);
  CHECK(pair_faces.size() == 7);

  const Gap* triangle = find_gap(pair_faces, {ang(1, 7), ang(2, 7), ang(4, 7)});
  REQUIRE(triangle != nullptr);
  const auto verdict = check_gap_invariance(pair, *triangle);
  CHECK(verdict.kind == GapImageVerdict::Kind::gap);
  CHECK(verdict.covering_degree == 1);

  const Lamination quad = quad_lamination();
  const auto quad_faces = gaps(quad);
  const Gap* quad_gap =
      find_gap(quad_faces, {ang(1, 14), ang(1, 7), ang(4, 7), ang(9, 14)});
  REQUIRE(quad_gap != nullptr);
  const auto collapsed = check_gap_invariance(quad, *quad_gap);
  CHECK(collapsed.kind == GapImageVerdict::Kind::leaf);
  CHECK(*collapsed.leaf == chord(1, 7, 2, 7));

  const Lamination critical_triangle(
      3, {chord(0, 1, 1, 3), chord(1, 3, 2, 3), chord(0, 1, 2, 3)});
  const auto triangle_faces = gaps(critical_triangle);
  const Gap* middle = find_gap(triangle_faces, {Angle(), ang(1, 3), ang(2, 3)});
  REQUIRE(middle != nullptr);
  const auto collapsed_point = check_gap_invariance(critical_triangle, *middle);
  CHECK(collapsed_point.kind == GapImageVerdict::Kind::point);
  CHECK(*collapsed_point.point == Angle());

  const Lamination lune(2, {chord(1, 4, 3, 4)});
  for (const Gap& g : gaps(lune)) {
    const auto v = check_gap_invariance(lune, g);
    CHECK(v.kind == GapImageVerdict::Kind::gap);
    CHECK(v.covering_degree == 1);
  }

  const Lamination orphan(2, {chord(1, 8, 3, 8)});
  const auto broken = check_gap_invariance(orphan, gaps(orphan)[0]);
  CHECK(broken.kind == GapImageVerdict::Kind::fail);
  CHECK(broken.witness.find("1/4 3/4") != std::string::npos);

  CHECK_THROWS_AS(check_gap_invariance(pair, gaps(orphan)[0]), std::invalid_argument);

  const auto disk = check_gap_invariance(Lamination(3, {}), gaps(Lamination(3, {}))[0]);
  CHECK(disk.kind == GapImageVerdict::Kind::gap);
  CHECK(disk.covering_degree == 3);
}

TEST_CASE("check_thurston") {
  CHECK(*check_thurston(rabbit_pair()).thurston_invariant);

  const auto forced =
      check_thurston(Lamination(2, {chord(0, 1, 1, 2)}), SiblingFrontier{});
  CHECK_FALSE(*forced.thurston_invariant);
  CHECK(forced.witnesses.at("backward_invariant_relative") ==
        std::vector<std::string>{"0 1/2"});

  // The lone triangle maps onto itself, so nothing is frontier, yet no
  // full preimage collection exists inside L.
  const auto lone = check_thurston(rabbit_triangle());
  CHECK_FALSE(*lone.thurston_invariant);
  CHECK(*lone.forward_invariant);
  CHECK(lone.witnesses.at("backward_invariant_relative").size() == 3);
}

TEST_CASE("collapsing_components") {
  const auto pair_comps = collapsing_components(rabbit_pair(), chord(2, 7, 4, 7));
  REQUIRE(pair_comps.size() == 2);
  CHECK(pair_comps[0].kind == CollapsingComponent::Kind::leaf);
  CHECK(pair_comps[0].members == std::vector<Chord>{chord(1, 7, 2, 7)});
  CHECK(pair_comps[1].kind == CollapsingComponent::Kind::leaf);
  CHECK(pair_comps[1].members == std::vector<Chord>{chord(9, 14, 11, 14)});

  const auto quad_comps = collapsing_components(quad_lamination(), chord(1, 7, 2, 7));
  REQUIRE(quad_comps.size() == 1);
  CHECK(quad_comps[0].kind == CollapsingComponent::Kind::polygon);
  CHECK(quad_comps[0].vertices ==
        std::vector<Angle>{ang(1, 14), ang(1, 7), ang(4, 7), ang(9, 14)});
  CHECK(quad_comps[0].hull_edges.size() == 4);

  // A critical leaf lies inside the quadrilateral but never glues components.
  const Lamination chain(3, {chord(0, 1, 1, 6), chord(1, 6, 1, 3), chord(1, 3, 1, 2),
                             chord(0, 1, 1, 2), chord(0, 1, 1, 3), chord(2, 3, 5, 6)});
  const auto merged = collapsing_components(chain, chord(0, 1, 1, 2));
  REQUIRE(merged.size() == 2);
  CHECK(merged[0].kind == CollapsingComponent::Kind::polygon);
  CHECK(merged[0].vertices ==
        std::vector<Angle>{Angle(), ang(1, 6), ang(1, 3), ang(1, 2)});
  CHECK(merged[0].members.size() == 4);
  CHECK(merged[1].kind == CollapsingComponent::Kind::leaf);
  CHECK(merged[1].members == std::vector<Chord>{chord(2, 3, 5, 6)});

  const Lamination wedge_only(2, {chord(0, 1, 1, 8), chord(0, 1, 5, 8), chord(0, 1, 1, 4)});
  CHECK_THROWS_AS(collapsing_components(wedge_only, chord(0, 1, 1, 4)),
                  std::runtime_error);

  CHECK_THROWS_AS(collapsing_components(rabbit_pair(), chord(1, 3, 2, 3)),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      collapsing_components(Lamination(2, {chord(1, 4, 3, 4)}), chord(1, 4, 3, 4)),
      std::invalid_argument);
}

TEST_CASE("critical_wedges") {
  const Lamination wedge(2, {chord(0, 1, 1, 8), chord(0, 1, 5, 8)});
  const auto found = critical_wedges(wedge);
  REQUIRE(found.size() == 1);
  CHECK(found[0].vertex == Angle());
  CHECK(found[0].leaf1 == chord(0, 1, 1, 8));
  CHECK(found[0].leaf2 == chord(0, 1, 5, 8));

  CHECK(critical_wedges(rabbit_pair()).empty());
  CHECK(critical_wedges(Lamination(2, {})).empty());
  CHECK(critical_wedges(quad_lamination()).size() == 4);
}

TEST_CASE("is_proper") {
  CHECK_FALSE(is_proper(Lamination(2, {chord(0, 1, 1, 2)})).value);
  CHECK(is_proper(Lamination(2, {chord(1, 4, 3, 4)})).value);

  const auto wedge = is_proper(Lamination(2, {chord(0, 1, 1, 8), chord(0, 1, 5, 8)}));
  CHECK_FALSE(wedge.value);
  REQUIRE(wedge.witnesses.size() == 1);
  CHECK(wedge.witnesses[0].find("critical wedge") != std::string::npos);

  const auto quad = is_proper(quad_lamination());
  CHECK_FALSE(quad.value);
  CHECK(quad.witnesses.size() == 2);
}

TEST_CASE("is_clean") {
  CHECK(is_clean(rabbit_triangle()).value);
  CHECK(is_clean(Lamination(2, {})).value);

  const auto star =
      is_clean(Lamination(2, {chord(0, 1, 1, 4), chord(0, 1, 1, 2), chord(0, 1, 3, 4)}));
  CHECK_FALSE(star.value);
  CHECK(star.witnesses == std::vector<std::string>{"0"});
}

TEST_CASE("is_wandering") {
  CHECK_FALSE(is_wandering(2, {ang(1, 7), ang(2, 7), ang(4, 7)}, 3));
  CHECK_FALSE(is_wandering(2, {Angle(), ang(1, 2)}, 1));
  CHECK(is_wandering(2, {ang(1, 100), ang(1, 99), ang(1, 98)}, 5));
  CHECK_FALSE(is_wandering(2, {ang(1, 100), ang(1, 99), ang(1, 98)}, 50));
  CHECK_THROWS_AS(is_wandering(2, {ang(1, 7)}, 3), std::invalid_argument);
  CHECK_THROWS_AS(is_wandering(2, {ang(1, 7), ang(2, 7)}, 0), std::invalid_argument);
}

TEST_CASE("hausdorff_distance") {
  const Lamination pair = rabbit_pair();
  CHECK(hausdorff_distance(pair, pair) == 0);

  const Lamination one(2, {chord(0, 1, 1, 2)});
  const Lamination two(2, {chord(0, 1, 1, 2), chord(1, 4, 3, 4)});
  CHECK(hausdorff_distance(one, two) == Rational(1, 4));
  CHECK(hausdorff_distance(two, one) == Rational(1, 4));

  CHECK(hausdorff_distance(Lamination(2, {}), Lamination(2, {})) == 0);
  CHECK(hausdorff_distance(Lamination(2, {}), one) == Rational(1, 2));
  CHECK_THROWS_AS(hausdorff_distance(one, Lamination(3, {chord(0, 1, 1, 2)})),
                  std::invalid_argument);

  const Lamination three(2, {chord(1, 8, 5, 8)});
  const Rational ab = hausdorff_distance(one, two);
  const Rational bc = hausdorff_distance(two, three);
  const Rational ac = hausdorff_distance(one, three);
  CHECK(ac <= ab + bc);
}
