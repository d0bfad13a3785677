#include "lamina/lamination.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace lamina {

namespace {

std::string gap_label(const Gap& gap) {
  std::string s = "gap[";
  for (std::size_t i = 0; i < gap.vertices.size(); ++i) {
    if (i) s += ' ';
    s += gap.vertices[i].str();
  }
  return s + "]";
}

GapImageVerdict fail_verdict(std::string witness) {
  GapImageVerdict v;
  v.kind = GapImageVerdict::Kind::fail;
  v.witness = std::move(witness);
  return v;
}

// Directed edges of the disk subdivision. Arcs are identified by their ccw
// span; type cw traverses a span backwards and only ever bounds the outer face.
struct DirEdge {
  enum Type { chord = 0, arc_ccw = 1, arc_cw = 2 };
  int type = chord;
  Angle from, to;
  friend bool operator==(const DirEdge&, const DirEdge&) = default;
  friend std::strong_ordering operator<=>(const DirEdge&, const DirEdge&) = default;
};

DirEdge reverse_edge(const DirEdge& e) {
  if (e.type == DirEdge::chord) return {DirEdge::chord, e.to, e.from};
  if (e.type == DirEdge::arc_ccw) return {DirEdge::arc_cw, e.to, e.from};
  return {DirEdge::arc_ccw, e.to, e.from};
}

struct FaceWalk {
  std::vector<Angle> vertices;
  std::map<Angle, std::vector<DirEdge>> rotation;

  explicit FaceWalk(const Lamination& lamination) {
    std::set<Angle> pts;
    std::map<Angle, std::vector<Angle>> chords_at;
    for (const Chord& c : lamination.leaves()) {
      pts.insert(c.a());
      pts.insert(c.b());
      chords_at[c.a()].push_back(c.b());
      chords_at[c.b()].push_back(c.a());
    }
    vertices.assign(pts.begin(), pts.end());
    const std::size_t n = vertices.size();
    for (std::size_t i = 0; i < n; ++i) {
      const Angle& v = vertices[i];
      const Angle& next = vertices[(i + 1) % n];
      const Angle& prev = vertices[(i + n - 1) % n];
      auto& out = rotation[v];
      out.push_back({DirEdge::arc_ccw, v, next});
      auto& others = chords_at[v];
      std::sort(others.begin(), others.end(), [&](const Angle& x, const Angle& y) {
        return ccw_dist(v, x) < ccw_dist(v, y);
      });
      for (const Angle& u : others) out.push_back({DirEdge::chord, v, u});
      out.push_back({DirEdge::arc_cw, v, prev});
    }
  }

  DirEdge next_edge(const DirEdge& e) const {
    const auto& out = rotation.at(e.to);
    const DirEdge rev = reverse_edge(e);
    const auto it = std::find(out.begin(), out.end(), rev);
    const std::size_t idx = it - out.begin();
    return out[(idx + out.size() - 1) % out.size()];
  }
};

Gap make_gap(const std::vector<DirEdge>& cycle) {
  std::vector<GapSide> sides;
  for (const DirEdge& e : cycle)
    sides.push_back({e.from, e.to, e.type == DirEdge::chord});
  // Point arcs between consecutive leaves sharing a vertex keep the
  // leaf/arc alternation.
  std::vector<GapSide> boundary;
  for (std::size_t i = 0; i < sides.size(); ++i) {
    boundary.push_back(sides[i]);
    const GapSide& next = sides[(i + 1) % sides.size()];
    if (sides[i].is_leaf && next.is_leaf)
      boundary.push_back({sides[i].to, sides[i].to, false});
  }
  const auto smallest = std::min_element(boundary.begin(), boundary.end());
  std::rotate(boundary.begin(), smallest, boundary.end());

  Gap gap;
  gap.boundary = std::move(boundary);
  for (const GapSide& s : gap.boundary)
    if (gap.vertices.empty() || gap.vertices.back() != s.from)
      gap.vertices.push_back(s.from);
  if (gap.vertices.size() > 1 && gap.vertices.front() == gap.vertices.back())
    gap.vertices.pop_back();
  return gap;
}

GapImageVerdict gap_invariance_unchecked(const Lamination& lamination, const Gap& gap) {
  const int d = lamination.degree();
  if (gap.whole_disk()) {
    GapImageVerdict v;
    v.kind = GapImageVerdict::Kind::gap;
    v.covering_degree = d;
    return v;
  }

  std::map<Chord, std::array<long long, 2>> chord_counts;
  std::vector<std::pair<Rational, Rational>> arc_cover;  // (start, length)
  Rational total = 0;
  for (const GapSide& side : gap.boundary) {
    if (side.is_leaf) {
      const Angle iu = sigma(d, side.from);
      const Angle iv = sigma(d, side.to);
      if (iu == iv) continue;  // critical side collapses to a point
      const Chord image(iu, iv);
      if (!lamination.contains(image))
        return fail_verdict("image leaf missing: " + Chord(side.from, side.to).str() +
                            " -> " + image.str());
      ++chord_counts[image][iu == image.a() ? 0 : 1];
      total += ccw_dist(iu, iv);
    } else if (side.from != side.to) {
      const Rational len = ccw_dist(side.from, side.to) * d;
      arc_cover.emplace_back(sigma(d, side.from).value(), len);
      total += len;
    }
  }

  if (chord_counts.empty() && arc_cover.empty()) {
    GapImageVerdict v;
    v.kind = GapImageVerdict::Kind::point;
    v.point = sigma(d, gap.vertices.front());
    return v;
  }
  if (arc_cover.empty() && chord_counts.size() == 1) {
    GapImageVerdict v;
    v.kind = GapImageVerdict::Kind::leaf;
    v.leaf = chord_counts.begin()->first;
    return v;
  }

  if (denominator(total) != 1)
    return fail_verdict("boundary image does not close up: winding " + total.str());
  const long long k = numerator(total).convert_to<long long>();
  if (k < 1) return fail_verdict("boundary image has zero winding");

  for (const auto& [image, counts] : chord_counts) {
    if (counts[0] > 0 && counts[1] > 0)
      return fail_verdict("image leaf " + image.str() + " traversed in both directions");
    const long long seen = counts[0] + counts[1];
    if (seen != k)
      return fail_verdict("image leaf " + image.str() + " covered " +
                          std::to_string(seen) + " times, expected " + std::to_string(k));
  }

  if (!arc_cover.empty()) {
    long long base = 0;
    std::vector<std::pair<Rational, Rational>> partials;  // [s, e) possibly wrapping
    std::set<Rational> cuts;
    for (const auto& [start, len] : arc_cover) {
      const Int laps = numerator(len) / denominator(len);
      base += laps.convert_to<long long>();
      const Rational rem = len - Rational(laps);
      if (rem > 0) {
        Rational end = start + rem;
        if (end >= 1) end -= 1;
        partials.emplace_back(start, end);
        cuts.insert(start);
        cuts.insert(end);
      }
    }
    std::vector<Rational> edges(cuts.begin(), cuts.end());
    if (edges.empty()) edges.push_back(0);
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const Rational& cur = edges[i];
      const Rational& next = edges[(i + 1) % edges.size()];
      Rational span = next - cur;
      if (span <= 0) span += 1;
      Rational mid = cur + span / 2;
      if (mid >= 1) mid -= 1;
      long long cover = base;
      for (const auto& [s, e] : partials)
        if (s < e ? (mid >= s && mid < e) : (mid >= s || mid < e)) ++cover;
      if (cover != 0 && cover != k)
        return fail_verdict("circle arc near " + Angle(mid).str() + " covered " +
                            std::to_string(cover) + " times, expected " +
                            std::to_string(k));
    }
  }

  GapImageVerdict v;
  v.kind = GapImageVerdict::Kind::gap;
  v.covering_degree = k;
  return v;
}

void require_frontier_subset(const Lamination& lamination, const SiblingFrontier& frontier) {
  for (const Chord& c : frontier.frontier)
    if (!lamination.contains(c))
      throw std::invalid_argument("frontier leaf not in lamination: " + c.str());
}

std::set<Chord> leaf_images(const Lamination& lamination) {
  std::set<Chord> images;
  for (const Chord& leaf : lamination.leaves()) {
    const ChordOrPoint image = chord_image(lamination.degree(), leaf);
    if (image.is_chord()) images.insert(image.chord());
  }
  return images;
}

}  // namespace

Lamination::Lamination(int degree, std::vector<Chord> leaves)
    : degree_(degree), leaves_(std::move(leaves)) {
  check_degree(degree_);
  std::sort(leaves_.begin(), leaves_.end());
  leaves_.erase(std::unique(leaves_.begin(), leaves_.end()), leaves_.end());
}

bool Lamination::contains(const Chord& leaf) const {
  return std::binary_search(leaves_.begin(), leaves_.end(), leaf);
}

ClassificationReport validate(const Lamination& lamination) {
  ClassificationReport report;
  std::vector<std::string> crossings;
  const auto& leaves = lamination.leaves();

  // Rank endpoints once so the pairwise test runs on integers; the rank map
  // preserves cyclic order, so rank crossing equals chord crossing.
  std::vector<Angle> points;
  points.reserve(2 * leaves.size());
  for (const Chord& leaf : leaves) {
    points.push_back(leaf.a());
    points.push_back(leaf.b());
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  const auto rank = [&points](const Angle& angle) {
    return static_cast<std::size_t>(
        std::lower_bound(points.begin(), points.end(), angle) - points.begin());
  };
  std::vector<std::pair<std::size_t, std::size_t>> spans;
  spans.reserve(leaves.size());
  for (const Chord& leaf : leaves) spans.emplace_back(rank(leaf.a()), rank(leaf.b()));

  for (std::size_t i = 0; i < leaves.size(); ++i)
    for (std::size_t j = i + 1; j < leaves.size(); ++j) {
      const auto [a1, b1] = spans[i];
      const auto [a2, b2] = spans[j];
      if (a2 == a1 || a2 == b1 || b2 == a1 || b2 == b1) continue;
      if ((a1 < a2 && a2 < b1) != (a1 < b2 && b2 < b1))
        crossings.push_back(leaves[i].str() + " x " + leaves[j].str());
    }
  report.unlinked_ok = crossings.empty();
  if (!crossings.empty()) report.witnesses["unlinked_ok"] = std::move(crossings);
  return report;
}

namespace {

std::vector<std::vector<Chord>> match_range(const std::vector<Angle>& pts, int lo, int hi) {
  if (lo >= hi) return {{}};
  std::vector<std::vector<Chord>> out;
  for (int j = lo + 1; j < hi; j += 2) {
    const Chord c(pts[lo], pts[j]);
    for (const auto& inner : match_range(pts, lo + 1, j))
      for (const auto& outer : match_range(pts, j + 1, hi)) {
        std::vector<Chord> matched{c};
        matched.insert(matched.end(), inner.begin(), inner.end());
        matched.insert(matched.end(), outer.begin(), outer.end());
        out.push_back(std::move(matched));
      }
  }
  return out;
}

}  // namespace

std::vector<std::vector<Chord>> full_preimage_collections(int degree, const Chord& m) {
  check_degree(degree);
  std::vector<Angle> pts = preimages(degree, m.a());
  const std::vector<Angle> more = preimages(degree, m.b());
  pts.insert(pts.end(), more.begin(), more.end());
  std::sort(pts.begin(), pts.end());
  auto collections = match_range(pts, 0, static_cast<int>(pts.size()));
  for (auto& collection : collections) std::sort(collection.begin(), collection.end());
  std::sort(collections.begin(), collections.end());
  return collections;
}

std::vector<std::vector<Chord>> sibling_collections(const Lamination& lamination,
                                                    const Chord& ell) {
  if (!lamination.contains(ell))
    throw std::invalid_argument("not a leaf of the lamination: " + ell.str());
  const ChordOrPoint image = chord_image(lamination.degree(), ell);
  if (image.is_point())
    throw std::invalid_argument("critical leaf has no sibling collection: " + ell.str());
  std::vector<std::vector<Chord>> out;
  for (auto& collection : full_preimage_collections(lamination.degree(), image.chord())) {
    if (!std::binary_search(collection.begin(), collection.end(), ell)) continue;
    const bool inside = std::all_of(collection.begin(), collection.end(),
                                    [&](const Chord& c) { return lamination.contains(c); });
    if (inside) out.push_back(std::move(collection));
  }
  return out;
}

SiblingFrontier auto_frontier(const Lamination& lamination) {
  const std::set<Chord> images = leaf_images(lamination);
  SiblingFrontier frontier;
  for (const Chord& leaf : lamination.leaves())
    if (!images.count(leaf)) frontier.frontier.insert(leaf);
  return frontier;
}

ClassificationReport check_sibling_invariant(const Lamination& lamination) {
  return check_sibling_invariant(lamination, auto_frontier(lamination));
}

ClassificationReport check_sibling_invariant(const Lamination& lamination,
                                             const SiblingFrontier& frontier) {
  require_frontier_subset(lamination, frontier);
  ClassificationReport report = validate(lamination);
  report.notes.push_back("frontier: " + std::to_string(frontier.frontier.size()) +
                         " of " + std::to_string(lamination.size()) + " leaves");
  if (!*report.unlinked_ok) {
    report.sibling_invariant = false;
    report.witnesses["sibling_invariant"].push_back("leaves cross; see unlinked_ok");
    return report;
  }

  const int d = lamination.degree();
  std::vector<std::string> forward_bad, backward_bad, collection_bad;
  const std::set<Chord> images = leaf_images(lamination);
  for (const Chord& leaf : lamination.leaves()) {
    const ChordOrPoint image = chord_image(d, leaf);
    if (image.is_chord() && !lamination.contains(image.chord()))
      forward_bad.push_back(leaf.str() + " -> " + image.chord().str());
    if (!frontier.frontier.count(leaf) && !images.count(leaf))
      backward_bad.push_back(leaf.str());
    if (image.is_chord() && sibling_collections(lamination, leaf).empty())
      collection_bad.push_back(leaf.str());
  }

  report.forward_invariant = forward_bad.empty();
  report.backward_invariant_relative = backward_bad.empty();
  report.sibling_invariant =
      forward_bad.empty() && backward_bad.empty() && collection_bad.empty();
  if (!forward_bad.empty()) report.witnesses["forward_invariant"] = forward_bad;
  if (!backward_bad.empty()) report.witnesses["backward_invariant_relative"] = backward_bad;
  if (!collection_bad.empty()) report.witnesses["sibling_invariant"] = collection_bad;
  return report;
}

std::vector<Gap> gaps(const Lamination& lamination) {
  if (lamination.empty()) {
    Gap disk;
    disk.boundary.push_back({Angle(), Angle(), false});
    disk.vertices.push_back(Angle());
    return {disk};
  }

  const FaceWalk walk(lamination);
  std::set<DirEdge> pending;
  for (const auto& [v, out] : walk.rotation)
    for (const DirEdge& e : out) pending.insert(e);

  std::vector<Gap> faces;
  while (!pending.empty()) {
    const DirEdge start = *pending.begin();
    std::vector<DirEdge> cycle;
    DirEdge e = start;
    do {
      pending.erase(e);
      cycle.push_back(e);
      e = walk.next_edge(e);
    } while (!(e == start));
    const bool outer = std::any_of(cycle.begin(), cycle.end(), [](const DirEdge& s) {
      return s.type == DirEdge::arc_cw;
    });
    if (!outer) faces.push_back(make_gap(cycle));
  }
  std::sort(faces.begin(), faces.end(),
            [](const Gap& g1, const Gap& g2) { return g1.boundary < g2.boundary; });
  return faces;
}

GapImageVerdict check_gap_invariance(const Lamination& lamination, const Gap& gap) {
  const auto faces = gaps(lamination);
  if (std::find(faces.begin(), faces.end(), gap) == faces.end())
    throw std::invalid_argument("not a face of the lamination: " + gap_label(gap));
  return gap_invariance_unchecked(lamination, gap);
}

ClassificationReport check_thurston(const Lamination& lamination) {
  return check_thurston(lamination, auto_frontier(lamination));
}

ClassificationReport check_thurston(const Lamination& lamination,
                                    const SiblingFrontier& frontier) {
  require_frontier_subset(lamination, frontier);
  ClassificationReport report = validate(lamination);
  report.notes.push_back("frontier: " + std::to_string(frontier.frontier.size()) +
                         " of " + std::to_string(lamination.size()) + " leaves");
  if (!*report.unlinked_ok) {
    report.thurston_invariant = false;
    report.witnesses["thurston_invariant"].push_back("leaves cross; see unlinked_ok");
    return report;
  }

  const int d = lamination.degree();
  std::vector<std::string> forward_bad, backward_bad, gap_bad;
  for (const Chord& leaf : lamination.leaves()) {
    const ChordOrPoint image = chord_image(d, leaf);
    if (image.is_chord() && !lamination.contains(image.chord()))
      forward_bad.push_back(leaf.str() + " -> " + image.chord().str());
    if (!frontier.frontier.count(leaf)) {
      // Existence of some full collection of preimage leaves; it need not
      // contain any particular preimage.
      bool found = false;
      for (const auto& collection : full_preimage_collections(d, leaf)) {
        if (std::all_of(collection.begin(), collection.end(),
                        [&](const Chord& c) { return lamination.contains(c); })) {
          found = true;
          break;
        }
      }
      if (!found) backward_bad.push_back(leaf.str());
    }
  }

  for (const Gap& gap : gaps(lamination)) {
    bool exempt = false;
    for (const GapSide& side : gap.boundary)
      if (side.is_leaf && frontier.frontier.count(Chord(side.from, side.to))) {
        exempt = true;
        break;
      }
    if (exempt) continue;
    const GapImageVerdict verdict = gap_invariance_unchecked(lamination, gap);
    if (verdict.kind == GapImageVerdict::Kind::fail)
      gap_bad.push_back(gap_label(gap) + ": " + verdict.witness);
  }

  report.forward_invariant = forward_bad.empty();
  report.backward_invariant_relative = backward_bad.empty();
  report.thurston_invariant =
      forward_bad.empty() && backward_bad.empty() && gap_bad.empty();
  if (!forward_bad.empty()) report.witnesses["forward_invariant"] = forward_bad;
  if (!backward_bad.empty()) report.witnesses["backward_invariant_relative"] = backward_bad;
  if (!gap_bad.empty()) report.witnesses["thurston_invariant"] = gap_bad;
  return report;
}

std::vector<CollapsingComponent> collapsing_components(const Lamination& lamination,
                                                       const Chord& m) {
  if (!lamination.contains(m))
    throw std::invalid_argument("not a leaf of the lamination: " + m.str());
  const int d = lamination.degree();
  if (is_critical(d, m))
    throw std::invalid_argument("degenerate image chord: " + m.str());

  const ChordOrPoint target((m));
  std::vector<Chord> onto;
  for (const Chord& leaf : lamination.leaves())
    if (chord_image(d, leaf) == target) onto.push_back(leaf);

  // Components of the shared-endpoint graph; critical leaves never connect.
  std::vector<int> component(onto.size(), -1);
  int count = 0;
  for (std::size_t i = 0; i < onto.size(); ++i) {
    if (component[i] != -1) continue;
    std::vector<std::size_t> stack{i};
    component[i] = count;
    while (!stack.empty()) {
      const std::size_t cur = stack.back();
      stack.pop_back();
      for (std::size_t j = 0; j < onto.size(); ++j) {
        if (component[j] != -1) continue;
        if (onto[cur].has_endpoint(onto[j].a()) || onto[cur].has_endpoint(onto[j].b())) {
          component[j] = count;
          stack.push_back(j);
        }
      }
    }
    ++count;
  }

  std::vector<CollapsingComponent> out(count);
  for (std::size_t i = 0; i < onto.size(); ++i)
    out[component[i]].members.push_back(onto[i]);
  for (CollapsingComponent& comp : out) {
    std::sort(comp.members.begin(), comp.members.end());
    std::set<Angle> vertex_set;
    for (const Chord& c : comp.members) {
      vertex_set.insert(c.a());
      vertex_set.insert(c.b());
    }
    comp.vertices.assign(vertex_set.begin(), vertex_set.end());
    if (comp.members.size() == 1) {
      comp.kind = CollapsingComponent::Kind::leaf;
      comp.hull_edges = comp.members;
      continue;
    }
    comp.kind = CollapsingComponent::Kind::polygon;
    const std::size_t n = comp.vertices.size();
    for (std::size_t i = 0; i < n; ++i) {
      const Chord edge(comp.vertices[i], comp.vertices[(i + 1) % n]);
      if (!lamination.contains(edge) || !(chord_image(d, edge) == target))
        throw std::runtime_error(
            "component is neither a leaf nor a collapsing polygon; bad hull edge " +
            edge.str());
      comp.hull_edges.push_back(edge);
    }
    std::sort(comp.hull_edges.begin(), comp.hull_edges.end());
  }
  std::sort(out.begin(), out.end(),
            [](const CollapsingComponent& c1, const CollapsingComponent& c2) {
              return c1.vertices < c2.vertices;
            });
  return out;
}

std::vector<CriticalWedge> critical_wedges(const Lamination& lamination) {
  const int d = lamination.degree();
  std::map<Angle, std::vector<Chord>> at;
  for (const Chord& leaf : lamination.leaves()) {
    at[leaf.a()].push_back(leaf);
    at[leaf.b()].push_back(leaf);
  }
  std::vector<CriticalWedge> out;
  for (const auto& [vertex, incident] : at) {
    for (std::size_t i = 0; i < incident.size(); ++i) {
      const ChordOrPoint first = chord_image(d, incident[i]);
      if (!first.is_chord()) continue;
      for (std::size_t j = i + 1; j < incident.size(); ++j)
        if (chord_image(d, incident[j]) == first)
          out.push_back({vertex, incident[i], incident[j]});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

WitnessedBool is_proper(const Lamination& lamination) {
  const int d = lamination.degree();
  WitnessedBool result;
  for (const Chord& leaf : lamination.leaves()) {
    if (!is_critical(d, leaf)) continue;
    for (const Angle& endpoint : {leaf.a(), leaf.b()})
      if (orbit_info(d, endpoint).preperiod == 0)
        result.witnesses.push_back("critical leaf " + leaf.str() +
                                   " has periodic endpoint " + endpoint.str());
  }
  for (const CriticalWedge& wedge : critical_wedges(lamination))
    if (orbit_info(d, wedge.vertex).preperiod == 0)
      result.witnesses.push_back("critical wedge at periodic vertex " +
                                 wedge.vertex.str() + ": " + wedge.leaf1.str() +
                                 " | " + wedge.leaf2.str());
  result.value = result.witnesses.empty();
  return result;
}

WitnessedBool is_clean(const Lamination& lamination) {
  std::map<Angle, int> valence;
  for (const Chord& leaf : lamination.leaves()) {
    ++valence[leaf.a()];
    ++valence[leaf.b()];
  }
  WitnessedBool result;
  for (const auto& [vertex, count] : valence)
    if (count >= 3) result.witnesses.push_back(vertex.str());
  result.value = result.witnesses.empty();
  return result;
}

bool convex_hulls_disjoint(std::vector<Angle> a_pts, std::vector<Angle> b_pts) {
  const auto normalize = [](std::vector<Angle>& pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.empty()) throw std::invalid_argument("empty point set");
  };
  normalize(a_pts);
  normalize(b_pts);
  for (const Angle& b : b_pts)
    if (std::binary_search(a_pts.begin(), a_pts.end(), b)) return false;
  if (a_pts.size() == 1) return true;
  const std::size_t n = a_pts.size();
  std::size_t arc = n;
  for (const Angle& b : b_pts) {
    const std::size_t j = std::upper_bound(a_pts.begin(), a_pts.end(), b) - a_pts.begin();
    const std::size_t idx = (j == 0 || j == n) ? n - 1 : j - 1;
    if (arc == n)
      arc = idx;
    else if (arc != idx)
      return false;
  }
  return true;
}

bool is_wandering(int degree, const std::vector<Angle>& points, int depth) {
  check_degree(degree);
  if (depth < 1) throw std::invalid_argument("depth must be at least 1");
  std::set<Angle> start(points.begin(), points.end());
  if (start.size() < 2) throw std::invalid_argument("need at least two points");

  std::vector<std::vector<Angle>> orbit;
  orbit.emplace_back(start.begin(), start.end());
  for (int m = 1; m <= depth; ++m) {
    std::set<Angle> next;
    for (const Angle& p : orbit.back()) next.insert(sigma(degree, p));
    orbit.emplace_back(next.begin(), next.end());
  }
  for (std::size_t m = 0; m < orbit.size(); ++m)
    for (std::size_t n = m + 1; n < orbit.size(); ++n)
      if (!convex_hulls_disjoint(orbit[m], orbit[n])) return false;
  return true;
}

Rational hausdorff_distance(const Lamination& l1, const Lamination& l2) {
  if (l1.degree() != l2.degree())
    throw std::invalid_argument("degree mismatch");
  if (l1.empty() && l2.empty()) return 0;
  if (l1.empty() || l2.empty()) return Rational(1, 2);

  const auto chord_dist = [](const Chord& c1, const Chord& c2) {
    const Rational straight = std::max(circle_dist(c1.a(), c2.a()),
                                       circle_dist(c1.b(), c2.b()));
    const Rational flipped = std::max(circle_dist(c1.a(), c2.b()),
                                      circle_dist(c1.b(), c2.a()));
    return std::min(straight, flipped);
  };
  const auto one_way = [&](const Lamination& from, const Lamination& to) {
    Rational worst = 0;
    for (const Chord& c1 : from.leaves()) {
      Rational best = 1;
      for (const Chord& c2 : to.leaves()) best = std::min(best, chord_dist(c1, c2));
      worst = std::max(worst, best);
    }
    return worst;
  };
  return std::max(one_way(l1, l2), one_way(l2, l1));
}

}  // namespace lamina
