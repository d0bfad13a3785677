#include "lamina/generators.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace lamina {

namespace {

Angle shifted(const Angle& base, const Rational& offset) {
  return Angle(base.value() + offset);
}

bool crosses_any(const Chord& c, const std::vector<Chord>& chords) {
  return std::any_of(chords.begin(), chords.end(),
                     [&c](const Chord& other) { return crosses(c, other); });
}

}  // namespace

CriticalPortrait::CriticalPortrait(int degree, std::vector<Chord> chords)
    : degree_(degree) {
  check_degree(degree);
  std::sort(chords.begin(), chords.end());
  chords.erase(std::unique(chords.begin(), chords.end()), chords.end());
  for (const Chord& c : chords)
    if (!is_critical(degree, c))
      throw std::invalid_argument("portrait chord is not critical: " + c.str());
  for (std::size_t i = 0; i < chords.size(); ++i)
    for (std::size_t j = i + 1; j < chords.size(); ++j)
      if (crosses(chords[i], chords[j]))
        throw std::invalid_argument("portrait chords cross: " + chords[i].str() +
                                    " x " + chords[j].str());

  // Total criticality = endpoints minus connected components.
  std::map<Angle, std::size_t> index;
  for (const Chord& c : chords) {
    index.emplace(c.a(), index.size());
    index.emplace(c.b(), index.size());
  }
  std::vector<std::size_t> parent(index.size());
  std::iota(parent.begin(), parent.end(), 0);
  const auto find = [&parent](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (const Chord& c : chords)
    parent[find(index.at(c.a()))] = find(index.at(c.b()));
  std::set<std::size_t> roots;
  for (std::size_t i = 0; i < parent.size(); ++i) roots.insert(find(i));
  if (index.size() - roots.size() != static_cast<std::size_t>(degree - 1))
    throw std::invalid_argument("portrait criticality must equal degree - 1");

  chords_ = std::move(chords);
}

PullbackResult pullback(const PullbackSpec& spec) {
  const Lamination& seed = spec.seed;
  const int d = seed.degree();
  if (spec.portrait.degree() != d)
    throw std::invalid_argument("portrait degree does not match seed");
  if (spec.depth < 0) throw std::invalid_argument("depth must be nonnegative");
  if (!*validate(seed).unlinked_ok)
    throw std::invalid_argument("seed has crossing leaves");
  for (const Chord& leaf : seed.leaves()) {
    const ChordOrPoint image = chord_image(d, leaf);
    if (image.is_chord() && !seed.contains(image.chord()))
      throw std::invalid_argument("seed is not forward invariant: " + leaf.str());
    if (crosses_any(leaf, spec.portrait.chords()))
      throw std::invalid_argument("portrait crosses seed leaf " + leaf.str());
  }

  std::set<Chord> all(seed.leaves().begin(), seed.leaves().end());
  std::map<Chord, int> generation;
  for (const Chord& leaf : seed.leaves()) generation[leaf] = 0;

  std::vector<Chord> current = seed.leaves();
  for (int round = 1; round <= spec.depth; ++round) {
    const std::set<Chord> snapshot = all;
    std::vector<Chord> next;
    for (const Chord& m : current) {
      std::vector<std::vector<Chord>> compatible;
      for (const auto& collection : full_preimage_collections(d, m)) {
        const bool ok =
            std::none_of(collection.begin(), collection.end(), [&](const Chord& c) {
              return crosses_any(c, spec.portrait.chords());
            });
        if (ok) compatible.push_back(collection);
      }
      if (compatible.empty())
        throw std::runtime_error("no portrait-compatible preimage collection for " +
                                 m.str());
      std::size_t best = 0;
      if (compatible.size() > 1) {
        // Several collections avoid the portrait only when they share its
        // endpoints; prefer the one reusing existing leaves.
        std::vector<std::size_t> reuse(compatible.size(), 0);
        for (std::size_t i = 0; i < compatible.size(); ++i)
          for (const Chord& c : compatible[i]) reuse[i] += snapshot.count(c);
        const std::size_t top = *std::max_element(reuse.begin(), reuse.end());
        std::size_t hits = 0;
        for (std::size_t i = 0; i < compatible.size(); ++i)
          if (reuse[i] == top) {
            best = i;
            ++hits;
          }
        if (hits != 1)
          throw std::runtime_error(
              "ambiguous preimage selection for " + m.str() +
              ": degenerate portrait/seed interaction");
      }
      for (const Chord& c : compatible[best])
        if (all.insert(c).second) {
          generation[c] = round;
          next.push_back(c);
        }
    }
    std::sort(next.begin(), next.end());
    current = std::move(next);
  }

  if (spec.include_portrait)
    for (const Chord& c : spec.portrait.chords())
      if (all.insert(c).second) generation[c] = -1;

  PullbackResult result{Lamination(d, {all.begin(), all.end()}),
                        std::move(generation), SiblingFrontier{}};
  result.frontier = auto_frontier(result.lamination);
  return result;
}

GapfreeFamily gapfree_family(int degree, int depth) {
  check_degree(degree);
  if (depth < 1) throw std::invalid_argument("depth must be at least 1");
  Int half = 1;
  for (int i = 0; i < depth; ++i) half *= degree;
  const Int den = 2 * half;

  std::vector<Chord> leaves;
  for (Int k = 1; k < half; ++k)
    leaves.emplace_back(Angle(k, den), Angle(den - k, den));
  GapfreeFamily family{Lamination(degree, std::move(leaves)), true, {}};

  const Rational a_half(1, 2);
  for (const Chord& leaf : family.lamination.leaves()) {
    const Angle t = leaf.a();
    const Angle image = sigma(degree, t);
    if (image.value() == 0 || image.value() == a_half) {
      family.parameter_map.push_back(t.str() + " -> collapse " + image.str());
      if (!chord_image(degree, leaf).is_point()) family.sawtooth_ok = false;
      continue;
    }
    const Angle u = image.value() < a_half ? image : Angle(1 - image.value());
    family.parameter_map.push_back(t.str() + " -> " + u.str());
    const Chord expected(u, Angle(1 - u.value()));
    const ChordOrPoint actual = chord_image(degree, leaf);
    if (!family.lamination.contains(expected) || !actual.is_chord() ||
        actual.chord() != expected)
      family.sawtooth_ok = false;
  }
  return family;
}

namespace {

// Assembles the critical-hexagon candidate over the period-3 orbit of x:
// triangle T, its non-orbit preimage hexagon H, the 18 section edges, and the
// two diagonals at the given corner of H with their in-section pullbacks.
std::optional<HexagonExample> build_hexagon(const Angle& x, std::size_t offset) {
  std::vector<Angle> orbit{x, sigma(3, x), sigma(3, sigma(3, x))};
  std::set<Angle> triangle(orbit.begin(), orbit.end());
  if (triangle.size() != 3 || sigma(3, orbit[2]) != x) return std::nullopt;

  std::set<Angle> hexagon;
  for (const Angle& t : triangle)
    for (const Angle& p : preimages(3, t))
      if (!triangle.count(p)) hexagon.insert(p);
  if (hexagon.size() != 6) return std::nullopt;
  const std::vector<Angle> hex(hexagon.begin(), hexagon.end());

  // The hexagon must cover T twice in alternating order: x y z x y z.
  std::set<Angle> first_half;
  for (std::size_t i = 0; i < 3; ++i) {
    first_half.insert(sigma(3, hex[i]));
    if (sigma(3, hex[i]) != sigma(3, hex[i + 3])) return std::nullopt;
  }
  if (first_half.size() != 3) return std::nullopt;

  if (!convex_hulls_disjoint(hex, {triangle.begin(), triangle.end()}))
    return std::nullopt;

  // The 18 hexagon-vertex preimages must split six per complementary arc of
  // the hexagon, each sextet a full lift of the vertex set.
  std::vector<Angle> lifts;
  for (const Angle& h : hex)
    for (const Angle& p : preimages(3, h)) lifts.push_back(p);
  std::sort(lifts.begin(), lifts.end());
  std::vector<std::vector<Angle>> sections;
  for (std::size_t i = 0; i < 6; ++i) {
    std::vector<Angle> inside;
    for (const Angle& p : lifts)
      if (in_cyclic_order(hex[i], p, hex[(i + 1) % 6])) inside.push_back(p);
    if (!inside.empty()) sections.push_back(std::move(inside));
  }
  if (sections.size() != 3) return std::nullopt;
  for (const std::vector<Angle>& section : sections) {
    if (section.size() != 6) return std::nullopt;
    std::set<Angle> covered;
    for (const Angle& p : section) covered.insert(sigma(3, p));
    if (covered != hexagon) return std::nullopt;
  }

  std::vector<Chord> base;
  const std::vector<Angle> tri(triangle.begin(), triangle.end());
  base.emplace_back(tri[0], tri[1]);
  base.emplace_back(tri[1], tri[2]);
  base.emplace_back(tri[0], tri[2]);
  for (std::size_t i = 0; i < 6; ++i)
    base.emplace_back(hex[i], hex[(i + 1) % 6]);
  for (const std::vector<Angle>& section : sections)
    for (std::size_t i = 0; i < 6; ++i)
      base.emplace_back(section[i], section[(i + 1) % 6]);
  if (!*validate(Lamination(3, base)).unlinked_ok) return std::nullopt;

  const Chord short_diag(hex[offset], hex[(offset + 2) % 6]);
  const Chord critical_diag(hex[offset], hex[(offset + 3) % 6]);

  std::vector<Chord> inserted{short_diag, critical_diag};
  for (const Chord& diag : {short_diag, critical_diag}) {
    std::vector<std::vector<Chord>> fitting;
    for (const auto& collection : full_preimage_collections(3, diag)) {
      const bool ok =
          std::none_of(collection.begin(), collection.end(),
                       [&base](const Chord& c) { return crosses_any(c, base); });
      if (ok) fitting.push_back(collection);
    }
    if (fitting.size() != 1) return std::nullopt;
    for (const Chord& c : fitting.front()) inserted.push_back(c);
  }

  std::vector<Chord> full = base;
  full.insert(full.end(), inserted.begin(), inserted.end());
  Lamination lamination(3, full);
  if (lamination.size() != base.size() + inserted.size()) return std::nullopt;
  if (!*validate(lamination).unlinked_ok) return std::nullopt;

  const ClassificationReport sibling = check_sibling_invariant(lamination);
  if (*sibling.sibling_invariant || !*sibling.forward_invariant ||
      !*sibling.backward_invariant_relative)
    return std::nullopt;
  const auto witness_it = sibling.witnesses.find("sibling_invariant");
  if (witness_it == sibling.witnesses.end() ||
      witness_it->second != std::vector<std::string>{short_diag.str()})
    return std::nullopt;
  if (!*check_thurston(lamination).thurston_invariant) return std::nullopt;

  Lamination base_lamination(3, base);
  if (!*check_sibling_invariant(base_lamination).sibling_invariant)
    return std::nullopt;

  std::sort(inserted.begin(), inserted.end());
  return HexagonExample{std::move(lamination), std::move(base_lamination),
                        short_diag, std::move(inserted), ""};
}

}  // namespace

HexagonExample hexagon_example() {
  std::optional<HexagonExample> found = build_hexagon(Angle(2, 13), 0);
  if (!found) throw std::logic_error("hexagon fixture failed to rebuild");
  found->provenance =
      "first hit of the bounded search over sigma_3 period-3 orbits: triangle "
      "{2/13, 5/13, 6/13}, hexagon {2,5,19,28,31,32}/39, diagonals from 2/39";
  return *std::move(found);
}

std::optional<HexagonExample> hexagon_search(int degree, long long max_den) {
  if (degree != 3)
    throw std::invalid_argument("hexagon search requires degree 3");
  for (long long q = 2; q <= max_den; ++q)
    for (long long p = 1; p < q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      const Angle x(p, q);
      const OrbitInfo info = orbit_info(3, x);
      if (info.preperiod != 0 || info.period != 3) continue;
      if (sigma(3, x) < x || sigma(3, sigma(3, x)) < x) continue;
      for (std::size_t offset = 0; offset < 6; ++offset) {
        std::optional<HexagonExample> found = build_hexagon(x, offset);
        if (found) {
          found->provenance = "search hit: orbit minimum " + x.str() +
                              ", diagonal corner " + std::to_string(offset);
          return found;
        }
      }
    }
  return std::nullopt;
}

ConvergingTuples converging_sibling_tuples(int degree, const Chord& limit_image,
                                           int count) {
  check_degree(degree);
  if (count < 1) throw std::invalid_argument("count must be at least 1");

  ConvergingTuples out;
  out.limit = full_preimage_collections(degree, limit_image).front();

  const Angle a = limit_image.a();
  const Angle b = limit_image.b();
  Rational eps = std::min(ccw_dist(a, b), ccw_dist(b, a)) / 4;
  for (int k = 1; k <= count; ++k) {
    eps /= 2;
    out.images.emplace_back(shifted(a, eps), shifted(b, -eps));
    std::vector<Chord> collection;
    for (const Chord& c : out.limit) {
      const bool a_first = sigma(degree, c.a()) == a;
      const Angle& pa = a_first ? c.a() : c.b();
      const Angle& pb = a_first ? c.b() : c.a();
      collection.emplace_back(shifted(pa, eps / degree), shifted(pb, -eps / degree));
    }
    std::sort(collection.begin(), collection.end());
    out.collections.push_back(std::move(collection));
  }
  return out;
}

namespace {

struct PresetData {
  int degree;
  std::vector<Chord> seed;
  std::vector<Chord> portrait;
};

PresetData preset_data(const std::string& name) {
  const auto c = [](long long an, long long ad, long long bn, long long bd) {
    return Chord(Angle(an, ad), Angle(bn, bd));
  };
  if (name == "rabbit")
    return {2,
            {c(1, 7, 2, 7), c(2, 7, 4, 7), c(1, 7, 4, 7)},
            {c(1, 14, 4, 7)}};
  if (name == "corabbit")
    return {2,
            {c(3, 7, 5, 7), c(5, 7, 6, 7), c(3, 7, 6, 7)},
            {c(3, 7, 13, 14)}};
  if (name == "basilica") return {2, {c(1, 3, 2, 3)}, {c(1, 6, 2, 3)}};
  if (name == "chebyshev") return {2, {c(1, 4, 3, 4)}, {c(1, 4, 3, 4)}};
  if (name == "dendrite") return {2, {c(1, 8, 5, 8)}, {c(1, 8, 5, 8)}};
  if (name == "airplane")
    return {2,
            {c(3, 7, 4, 7), c(2, 7, 5, 7), c(1, 7, 6, 7)},
            {c(2, 9, 13, 18)}};
  if (name == "improper") return {2, {c(1, 7, 9, 14)}, {c(1, 7, 9, 14)}};
  if (name == "t13")
    return {3,
            {c(1, 13, 3, 13), c(3, 13, 9, 13), c(1, 13, 9, 13)},
            {c(10, 39, 23, 39), c(3, 78, 55, 78)}};
  if (name == "t26")
    return {3,
            {c(1, 26, 3, 26), c(3, 26, 9, 26), c(1, 26, 9, 26)},
            {c(114, 312, 218, 312), c(11, 312, 219, 312)}};
  throw std::invalid_argument("unknown preset: " + name);
}

}  // namespace

std::vector<std::string> preset_names() {
  return {"airplane", "basilica", "chebyshev", "corabbit", "dendrite",
          "improper", "rabbit",   "t13",       "t26"};
}

PullbackResult presets(const std::string& name, int depth) {
  PresetData data = preset_data(name);
  return pullback(PullbackSpec{Lamination(data.degree, std::move(data.seed)),
                               CriticalPortrait(data.degree, std::move(data.portrait)),
                               depth, false});
}

}  // namespace lamina
