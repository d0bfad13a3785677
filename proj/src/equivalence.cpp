#include "lamina/equivalence.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace lamina {

namespace {

std::string format_class(const std::vector<Angle>& cls) {
  std::ostringstream out;
  out << "{";
  for (std::size_t i = 0; i < cls.size(); ++i) {
    if (i) out << " ";
    out << cls[i];
  }
  out << "}";
  return out.str();
}

std::vector<Angle> image_set(int degree, const std::vector<Angle>& cls) {
  std::set<Angle> out;
  for (const Angle& x : cls) out.insert(sigma(degree, x));
  return {out.begin(), out.end()};
}

// Cyclic consecutive pairs of a circularly sorted class; a two-point class
// has a single edge, not the same chord twice.
std::vector<Chord> hull_edges(const std::vector<Angle>& cls) {
  std::vector<Chord> edges;
  if (cls.size() < 2) return edges;
  if (cls.size() == 2) {
    edges.emplace_back(cls[0], cls[1]);
    return edges;
  }
  for (std::size_t i = 0; i < cls.size(); ++i)
    edges.emplace_back(cls[i], cls[(i + 1) % cls.size()]);
  return edges;
}

bool sigma_injective_on(int degree, const std::vector<Angle>& cls) {
  std::set<Angle> images;
  for (const Angle& x : cls)
    if (!images.insert(sigma(degree, x)).second) return false;
  return true;
}

}  // namespace

Partition::Partition(std::vector<std::vector<Angle>> classes) {
  for (auto& cls : classes) {
    std::sort(cls.begin(), cls.end());
    cls.erase(std::unique(cls.begin(), cls.end()), cls.end());
    if (cls.empty()) throw std::invalid_argument("empty class");
    for (const Angle& x : cls)
      if (!universe_.insert(x).second)
        throw std::invalid_argument("overlapping classes at " + x.str());
  }
  std::sort(classes.begin(), classes.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  classes_ = std::move(classes);
}

const std::vector<Angle>* Partition::class_of(const Angle& x) const {
  for (const auto& cls : classes_)
    if (std::binary_search(cls.begin(), cls.end(), x)) return &cls;
  return nullptr;
}

bool EquivalenceReport::passed() const {
  const auto ok = [](const std::optional<bool>& flag) {
    return flag.has_value() && *flag;
  };
  return ok(e2_unlinked) && ok(d1_forward) && ok(d3_covering) && ok(d4_finite);
}

Partition finite_classes(const Lamination& lam) {
  std::map<Angle, std::size_t> index;
  for (const Chord& leaf : lam.leaves()) {
    index.emplace(leaf.a(), index.size());
    index.emplace(leaf.b(), index.size());
  }
  std::vector<std::size_t> parent(index.size());
  std::iota(parent.begin(), parent.end(), 0);
  const auto find = [&parent](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (const Chord& leaf : lam.leaves())
    parent[find(index.at(leaf.a()))] = find(index.at(leaf.b()));

  std::map<std::size_t, std::vector<Angle>> components;
  for (const auto& [angle, i] : index) components[find(i)].push_back(angle);
  std::vector<std::vector<Angle>> classes;
  for (auto& [root, cls] : components) classes.push_back(std::move(cls));
  return Partition(std::move(classes));
}

EquivalenceReport check_laminational_equivalence(int degree, const Partition& part) {
  check_degree(degree);
  EquivalenceReport report;
  report.d4_finite = true;
  report.notes.push_back("E1 closedness: not applicable to finite data");
  report.notes.push_back("D4 finiteness: classes are finite by construction");

  const auto& classes = part.classes();

  std::vector<std::string> e2_bad;
  for (std::size_t i = 0; i < classes.size(); ++i)
    for (std::size_t j = i + 1; j < classes.size(); ++j)
      if (!convex_hulls_disjoint(classes[i], classes[j]))
        e2_bad.push_back(format_class(classes[i]) + " x " + format_class(classes[j]));
  report.e2_unlinked = e2_bad.empty();
  if (!e2_bad.empty()) report.witnesses["e2_unlinked"] = std::move(e2_bad);

  std::vector<std::string> d1_bad;
  bool relative = false;
  for (const auto& cls : classes) {
    const std::vector<Angle> image = image_set(degree, cls);
    const bool image_in_universe =
        std::all_of(image.begin(), image.end(),
                    [&part](const Angle& x) { return part.universe().count(x) > 0; });
    if (image_in_universe) {
      const std::vector<Angle>* target = part.class_of(image.front());
      if (target == nullptr || *target != image)
        d1_bad.push_back("class " + format_class(cls) + " -> image " +
                         format_class(image) + " is not a class");
    } else if (image.size() == 1) {
      // Implicit singleton class; nothing to compare against.
    } else {
      relative = true;
      report.notes.push_back("D1 skipped for class " + format_class(cls) +
                             ": image leaves the universe");
    }
  }
  report.d1_forward = d1_bad.empty();
  if (!d1_bad.empty()) report.witnesses["d1_forward"] = std::move(d1_bad);
  if (relative)
    report.notes.push_back("universe is not forward closed; D1 verified relative to it");

  std::vector<std::string> d3_bad;
  for (const auto& cls : classes) {
    if (cls.size() <= 2) continue;
    const std::vector<Angle> image = image_set(degree, cls);
    for (std::size_t k = 0; k < cls.size(); ++k) {
      const Angle& s = cls[k];
      const Angle& t = cls[(k + 1) % cls.size()];
      const Angle is = sigma(degree, s);
      const Angle it = sigma(degree, t);
      bool ok;
      if (is == it) {
        ok = image.size() == 1;
      } else {
        ok = std::none_of(image.begin(), image.end(), [&](const Angle& x) {
          return in_cyclic_order(is, x, it);
        });
      }
      if (!ok)
        d3_bad.push_back("class " + format_class(cls) + ": arc (" + s.str() + " " +
                         t.str() + ") -> (" + is.str() + " " + it.str() +
                         ") is not a complementary arc of the image");
    }
  }
  report.d3_covering = d3_bad.empty();
  if (!d3_bad.empty()) report.witnesses["d3_covering"] = std::move(d3_bad);
  report.notes.push_back("D3 checked on classes with more than two points");

  return report;
}

Lamination q_lamination_from(int degree, const Partition& part) {
  const EquivalenceReport report = check_laminational_equivalence(degree, part);
  if (!report.passed()) {
    std::string reason = "not a laminational equivalence";
    if (!report.witnesses.empty()) {
      const auto& [key, list] = *report.witnesses.begin();
      reason += " (" + key + ": " + list.front() + ")";
    }
    throw std::runtime_error(reason);
  }
  std::vector<Chord> leaves;
  for (const auto& cls : part.classes())
    for (const Chord& edge : hull_edges(cls)) leaves.push_back(edge);
  return Lamination(degree, std::move(leaves));
}

WitnessedBool is_q_lamination(const Lamination& lam) {
  WitnessedBool out;
  const ClassificationReport crossings = validate(lam);
  if (!*crossings.unlinked_ok) {
    for (const auto& w : crossings.witnesses.at("unlinked_ok"))
      out.witnesses.push_back("crossing leaves: " + w);
    out.value = false;
    return out;
  }

  const WitnessedBool proper = is_proper(lam);
  if (!proper.value)
    for (const auto& w : proper.witnesses) out.witnesses.push_back("not proper: " + w);

  const Partition part = finite_classes(lam);
  const EquivalenceReport report =
      check_laminational_equivalence(lam.degree(), part);
  if (!report.passed())
    for (const auto& [key, list] : report.witnesses)
      for (const auto& w : list) out.witnesses.push_back("equivalence " + key + ": " + w);

  std::set<Chord> edge_set;
  for (const auto& cls : part.classes()) {
    for (const Chord& edge : hull_edges(cls)) {
      edge_set.insert(edge);
      if (!lam.contains(edge))
        out.witnesses.push_back("missing hull edge " + edge.str() + " of class " +
                                format_class(cls));
    }
  }
  for (const Chord& leaf : lam.leaves())
    if (!edge_set.count(leaf)) {
      const std::vector<Angle>* cls = part.class_of(leaf.a());
      out.witnesses.push_back("interior leaf " + leaf.str() + " of class " +
                              (cls ? format_class(*cls) : "{}"));
    }

  out.value = out.witnesses.empty();
  return out;
}

SplittingVerdict critical_splitting(const Lamination& lam) {
  if (lam.degree() != 2)
    throw std::invalid_argument("critical splitting requires degree 2");
  SplittingVerdict verdict;
  const Partition part = finite_classes(lam);

  std::vector<const std::vector<Angle>*> critical_classes;
  for (const auto& cls : part.classes())
    if (!sigma_injective_on(2, cls)) critical_classes.push_back(&cls);

  for (const auto* cls : critical_classes) {
    std::set<Chord> edges;
    for (const Chord& e : hull_edges(*cls)) edges.insert(e);
    for (const Chord& leaf : lam.leaves()) {
      if (!is_critical(2, leaf) || edges.count(leaf)) continue;
      const bool endpoints_in =
          std::binary_search(cls->begin(), cls->end(), leaf.a()) &&
          std::binary_search(cls->begin(), cls->end(), leaf.b());
      const bool separates =
          std::any_of(cls->begin(), cls->end(),
                      [&](const Angle& u) { return in_cyclic_order(leaf.a(), u, leaf.b()); }) &&
          std::any_of(cls->begin(), cls->end(),
                      [&](const Angle& u) { return in_cyclic_order(leaf.b(), u, leaf.a()); });
      if (endpoints_in || separates) {
        verdict.kind = SplittingVerdict::Kind::leaf_splitting;
        verdict.witness_chords = {leaf};
        verdict.critical_class = *cls;
        return verdict;
      }
    }
  }

  for (const auto* cls : critical_classes) {
    const std::size_t n = cls->size();
    if (n < 5) continue;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        for (std::size_t k = j + 1; k < n; ++k)
          for (std::size_t l = k + 1; l < n; ++l) {
            const std::vector<Angle> quad = {(*cls)[i], (*cls)[j], (*cls)[k],
                                             (*cls)[l]};
            const std::vector<Chord> edges = hull_edges(quad);
            bool ok = true;
            std::optional<Chord> common;
            for (const Chord& e : edges) {
              if (!lam.contains(e)) {
                ok = false;
                break;
              }
              const ChordOrPoint image = chord_image(2, e);
              if (!image.is_chord() || (common && *common != image.chord())) {
                ok = false;
                break;
              }
              common = image.chord();
            }
            if (!ok) continue;
            verdict.kind = SplittingVerdict::Kind::quadrilateral_splitting;
            verdict.witness_chords = edges;
            verdict.critical_class = *cls;
            return verdict;
          }
  }
  return verdict;
}

ClassificationReport classify(const Lamination& lam) {
  ClassificationReport report = check_sibling_invariant(lam);

  const ClassificationReport thurston = check_thurston(lam);
  report.thurston_invariant = thurston.thurston_invariant;
  if (auto it = thurston.witnesses.find("thurston_invariant");
      it != thurston.witnesses.end())
    for (const auto& w : it->second)
      report.witnesses["thurston_invariant"].push_back(w);
  if (auto it = thurston.witnesses.find("backward_invariant_relative");
      it != thurston.witnesses.end())
    for (const auto& w : it->second)
      report.witnesses["thurston_invariant"].push_back(
          "no full preimage collection for " + w);
  for (const auto& note : thurston.notes)
    if (std::find(report.notes.begin(), report.notes.end(), note) == report.notes.end())
      report.notes.push_back(note);

  const WitnessedBool proper = is_proper(lam);
  report.proper = proper.value;
  if (!proper.value) report.witnesses["proper"] = proper.witnesses;

  const WitnessedBool clean = is_clean(lam);
  report.clean = clean.value;
  if (!clean.value) report.witnesses["clean"] = clean.witnesses;

  const WitnessedBool q = is_q_lamination(lam);
  report.q_lamination = q.value;
  if (!q.value) report.witnesses["q_lamination"] = q.witnesses;

  std::optional<SplittingVerdict> splitting;
  if (lam.degree() == 2) {
    splitting = critical_splitting(lam);
    std::string note = "critical splitting: ";
    switch (splitting->kind) {
      case SplittingVerdict::Kind::none:
        note += "none";
        break;
      case SplittingVerdict::Kind::leaf_splitting:
        note += "leaf " + splitting->witness_chords.front().str() + " in class " +
                format_class(splitting->critical_class);
        break;
      case SplittingVerdict::Kind::quadrilateral_splitting: {
        note += "quadrilateral";
        for (const Chord& e : splitting->witness_chords) note += " " + e.str();
        note += " in class " + format_class(splitting->critical_class);
        break;
      }
    }
    report.notes.push_back(note);
  }

  const auto set_true = [](const std::optional<bool>& flag) {
    return flag.has_value() && *flag;
  };
  const auto set_false = [](const std::optional<bool>& flag) {
    return flag.has_value() && !*flag;
  };
  if (set_true(report.sibling_invariant) && set_false(report.thurston_invariant))
    report.internal_errors.push_back(
        "sibling invariant holds but thurston invariant fails");
  if (set_true(report.q_lamination) && set_false(report.proper))
    report.internal_errors.push_back("q-lamination is not proper");
  if (set_true(report.q_lamination) && splitting &&
      splitting->kind != SplittingVerdict::Kind::none)
    report.internal_errors.push_back("q-lamination admits a critical splitting");

  return report;
}

}  // namespace lamina
