#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <set>
#include <string>
#include <vector>

#include "lamina/io.hpp"

namespace py = pybind11;
using namespace lamina;

namespace {

py::object fraction_type() {
  static py::handle type = [] {
    py::object t = py::module_::import("fractions").attr("Fraction");
    return t.release();
  }();
  return py::reinterpret_borrow<py::object>(type);
}

py::object to_fraction(const Rational& value) {
  return fraction_type()(Rational(value).str());
}

// Accepts Angle, "p/q" strings, ints, and Fraction-likes.
Angle angle_from_object(py::handle obj) {
  if (py::isinstance<Angle>(obj)) return obj.cast<Angle>();
  if (py::isinstance<py::str>(obj)) return Angle::parse(obj.cast<std::string>());
  if (py::hasattr(obj, "numerator") && py::hasattr(obj, "denominator"))
    return Angle::parse(py::str(obj.attr("numerator")).cast<std::string>() + "/" +
                        py::str(obj.attr("denominator")).cast<std::string>());
  throw py::type_error("expected an Angle, 'p/q' string, int, or Fraction");
}

SiblingFrontier frontier_from(const std::optional<std::vector<Chord>>& chords) {
  SiblingFrontier frontier;
  if (chords) frontier.frontier.insert(chords->begin(), chords->end());
  return frontier;
}

std::vector<Chord> frontier_chords(const SiblingFrontier& frontier) {
  return {frontier.frontier.begin(), frontier.frontier.end()};
}

}  // namespace

PYBIND11_MODULE(_lamina, m) {
  m.doc() = "exact-arithmetic laminations of the circle under angle d-tupling";
  m.attr("__version__") = "1.0.0";

  py::register_exception<ParseError>(m, "ParseError");

  py::class_<Angle>(m, "Angle")
      .def(py::init(&angle_from_object), py::arg("value"))
      .def(py::init([](long long p, long long q) { return Angle(Int(p), Int(q)); }),
           py::arg("numerator"), py::arg("denominator"))
      .def_property_readonly("fraction",
                             [](const Angle& a) { return to_fraction(a.value()); })
      .def_property_readonly("numerator",
                             [](const Angle& a) {
                               const py::object f = to_fraction(a.value());
                               return py::object(f.attr("numerator"));
                             })
      .def_property_readonly("denominator",
                             [](const Angle& a) {
                               const py::object f = to_fraction(a.value());
                               return py::object(f.attr("denominator"));
                             })
      .def("__str__", &Angle::str)
      .def("__repr__", [](const Angle& a) { return "Angle('" + a.str() + "')"; })
      .def("__eq__", [](const Angle& a, const Angle& b) { return a == b; },
           py::is_operator())
      .def("__lt__", [](const Angle& a, const Angle& b) { return a < b; },
           py::is_operator())
      .def("__le__", [](const Angle& a, const Angle& b) { return a <= b; },
           py::is_operator())
      .def("__gt__", [](const Angle& a, const Angle& b) { return a > b; },
           py::is_operator())
      .def("__ge__", [](const Angle& a, const Angle& b) { return a >= b; },
           py::is_operator())
      .def("__hash__", [](const Angle& a) { return py::hash(py::str(a.str())); });
  py::implicitly_convertible<py::str, Angle>();

  py::class_<OrbitInfo>(m, "OrbitInfo")
      .def_readonly("preperiod", &OrbitInfo::preperiod)
      .def_readonly("period", &OrbitInfo::period)
      .def("__eq__", [](const OrbitInfo& a, const OrbitInfo& b) { return a == b; },
           py::is_operator())
      .def("__repr__", [](const OrbitInfo& o) {
        return "OrbitInfo(preperiod=" + std::to_string(o.preperiod) +
               ", period=" + std::to_string(o.period) + ")";
      });

  py::class_<Chord>(m, "Chord")
      .def(py::init([](py::object x, py::object y) {
             return Chord(angle_from_object(x), angle_from_object(y));
           }),
           py::arg("x"), py::arg("y"))
      .def(py::init([](const std::string& text) { return Chord::parse(text); }),
           py::arg("text"))
      .def(py::init([](py::tuple pair) {
        if (pair.size() != 2) throw py::type_error("expected a pair of angles");
        return Chord(angle_from_object(pair[0]), angle_from_object(pair[1]));
      }))
      .def_property_readonly("a", &Chord::a)
      .def_property_readonly("b", &Chord::b)
      .def("has_endpoint",
           [](const Chord& c, py::object p) {
             return c.has_endpoint(angle_from_object(p));
           },
           py::arg("point"))
      .def("__str__", &Chord::str)
      .def("__repr__", [](const Chord& c) { return "Chord('" + c.str() + "')"; })
      .def("__eq__", [](const Chord& a, const Chord& b) { return a == b; },
           py::is_operator())
      .def("__lt__", [](const Chord& a, const Chord& b) { return a < b; },
           py::is_operator())
      .def("__hash__", [](const Chord& c) { return py::hash(py::str(c.str())); });
  py::implicitly_convertible<py::str, Chord>();
  py::implicitly_convertible<py::tuple, Chord>();

  py::class_<ChordOrPoint>(m, "ChordOrPoint")
      .def_property_readonly("is_point", &ChordOrPoint::is_point)
      .def_property_readonly("is_chord", &ChordOrPoint::is_chord)
      .def_property_readonly("point", &ChordOrPoint::point)
      .def_property_readonly("chord", &ChordOrPoint::chord)
      .def("__str__", &ChordOrPoint::str)
      .def("__repr__",
           [](const ChordOrPoint& v) { return "ChordOrPoint('" + v.str() + "')"; })
      .def("__eq__",
           [](const ChordOrPoint& a, const ChordOrPoint& b) { return a == b; },
           py::is_operator());

  py::class_<Lamination>(m, "Lamination")
      .def(py::init<int, std::vector<Chord>>(), py::arg("degree"),
           py::arg("leaves"))
      .def_property_readonly("degree", &Lamination::degree)
      .def_property_readonly("leaves", &Lamination::leaves)
      .def("__len__", &Lamination::size)
      .def("__contains__", &Lamination::contains)
      .def("__eq__",
           [](const Lamination& a, const Lamination& b) { return a == b; },
           py::is_operator())
      .def("__repr__",
           [](const Lamination& l) {
             return "Lamination(degree=" + std::to_string(l.degree()) + ", " +
                    std::to_string(l.size()) + " leaves)";
           })
      .def("to_text", &serialize_lamination)
      .def("to_json", &serialize_lamination_json);

  py::class_<ClassificationReport>(m, "ClassificationReport")
      .def_readonly("unlinked_ok", &ClassificationReport::unlinked_ok)
      .def_readonly("forward_invariant", &ClassificationReport::forward_invariant)
      .def_readonly("backward_invariant_relative",
                    &ClassificationReport::backward_invariant_relative)
      .def_readonly("sibling_invariant", &ClassificationReport::sibling_invariant)
      .def_readonly("thurston_invariant", &ClassificationReport::thurston_invariant)
      .def_readonly("proper", &ClassificationReport::proper)
      .def_readonly("clean", &ClassificationReport::clean)
      .def_readonly("q_lamination", &ClassificationReport::q_lamination)
      .def_readonly("witnesses", &ClassificationReport::witnesses)
      .def_readonly("notes", &ClassificationReport::notes)
      .def_readonly("internal_errors", &ClassificationReport::internal_errors);

  py::class_<WitnessedBool>(m, "WitnessedBool")
      .def_readonly("value", &WitnessedBool::value)
      .def_readonly("witnesses", &WitnessedBool::witnesses)
      .def("__bool__", [](const WitnessedBool& w) { return w.value; })
      .def("__repr__", [](const WitnessedBool& w) {
        return std::string("WitnessedBool(") + (w.value ? "True" : "False") + ")";
      });

  py::class_<GapSide>(m, "GapSide")
      .def_readonly("from_", &GapSide::from)
      .def_readonly("to", &GapSide::to)
      .def_readonly("is_leaf", &GapSide::is_leaf)
      .def("__eq__", [](const GapSide& a, const GapSide& b) { return a == b; },
           py::is_operator());

  py::class_<Gap>(m, "Gap")
      .def_readonly("boundary", &Gap::boundary)
      .def_readonly("vertices", &Gap::vertices)
      .def("whole_disk", &Gap::whole_disk)
      .def("__eq__", [](const Gap& a, const Gap& b) { return a == b; },
           py::is_operator())
      .def("__repr__", [](const Gap& g) {
        return "Gap(" + std::to_string(g.vertices.size()) + " vertices)";
      });

  py::class_<GapImageVerdict> gap_verdict(m, "GapImageVerdict");
  py::enum_<GapImageVerdict::Kind>(gap_verdict, "Kind")
      .value("point", GapImageVerdict::Kind::point)
      .value("leaf", GapImageVerdict::Kind::leaf)
      .value("gap", GapImageVerdict::Kind::gap)
      .value("fail", GapImageVerdict::Kind::fail);
  gap_verdict.def_readonly("kind", &GapImageVerdict::kind)
      .def_readonly("point", &GapImageVerdict::point)
      .def_readonly("leaf", &GapImageVerdict::leaf)
      .def_readonly("covering_degree", &GapImageVerdict::covering_degree)
      .def_readonly("witness", &GapImageVerdict::witness);

  py::class_<CollapsingComponent> collapsing(m, "CollapsingComponent");
  py::enum_<CollapsingComponent::Kind>(collapsing, "Kind")
      .value("leaf", CollapsingComponent::Kind::leaf)
      .value("polygon", CollapsingComponent::Kind::polygon);
  collapsing.def_readonly("kind", &CollapsingComponent::kind)
      .def_readonly("vertices", &CollapsingComponent::vertices)
      .def_readonly("members", &CollapsingComponent::members)
      .def_readonly("hull_edges", &CollapsingComponent::hull_edges);

  py::class_<CriticalWedge>(m, "CriticalWedge")
      .def_readonly("vertex", &CriticalWedge::vertex)
      .def_readonly("leaf1", &CriticalWedge::leaf1)
      .def_readonly("leaf2", &CriticalWedge::leaf2)
      .def("__eq__",
           [](const CriticalWedge& a, const CriticalWedge& b) { return a == b; },
           py::is_operator());

  py::class_<Partition>(m, "Partition")
      .def(py::init([](const std::vector<std::vector<py::object>>& classes) {
             std::vector<std::vector<Angle>> converted;
             for (const auto& cls : classes) {
               std::vector<Angle> angles;
               for (const auto& item : cls) angles.push_back(angle_from_object(item));
               converted.push_back(std::move(angles));
             }
             return Partition(std::move(converted));
           }),
           py::arg("classes"))
      .def_property_readonly("classes", &Partition::classes)
      .def_property_readonly("universe", &Partition::universe)
      .def("class_of",
           [](const Partition& p, py::object x) -> py::object {
             const auto* cls = p.class_of(angle_from_object(x));
             if (!cls) return py::none();
             return py::cast(*cls);
           },
           py::arg("x"))
      .def("__repr__", [](const Partition& p) {
        return "Partition(" + std::to_string(p.classes().size()) + " classes)";
      });

  py::class_<EquivalenceReport>(m, "EquivalenceReport")
      .def_readonly("e2_unlinked", &EquivalenceReport::e2_unlinked)
      .def_readonly("d1_forward", &EquivalenceReport::d1_forward)
      .def_readonly("d3_covering", &EquivalenceReport::d3_covering)
      .def_readonly("d4_finite", &EquivalenceReport::d4_finite)
      .def_readonly("witnesses", &EquivalenceReport::witnesses)
      .def_readonly("notes", &EquivalenceReport::notes)
      .def("passed", &EquivalenceReport::passed);

  py::class_<SplittingVerdict> splitting(m, "SplittingVerdict");
  py::enum_<SplittingVerdict::Kind>(splitting, "Kind")
      .value("none", SplittingVerdict::Kind::none)
      .value("leaf_splitting", SplittingVerdict::Kind::leaf_splitting)
      .value("quadrilateral_splitting",
             SplittingVerdict::Kind::quadrilateral_splitting);
  splitting.def_readonly("kind", &SplittingVerdict::kind)
      .def_readonly("witness_chords", &SplittingVerdict::witness_chords)
      .def_readonly("critical_class", &SplittingVerdict::critical_class);

  py::class_<CriticalPortrait>(m, "CriticalPortrait")
      .def(py::init<int, std::vector<Chord>>(), py::arg("degree"),
           py::arg("chords"))
      .def_property_readonly("degree", &CriticalPortrait::degree)
      .def_property_readonly("chords", &CriticalPortrait::chords)
      .def("__repr__", [](const CriticalPortrait& p) {
        return "CriticalPortrait(degree=" + std::to_string(p.degree()) + ", " +
               std::to_string(p.chords().size()) + " chords)";
      });

  py::class_<PullbackResult>(m, "PullbackResult")
      .def_readonly("lamination", &PullbackResult::lamination)
      .def_readonly("generation", &PullbackResult::generation)
      .def_property_readonly(
          "frontier",
          [](const PullbackResult& r) { return frontier_chords(r.frontier); })
      .def("__repr__", [](const PullbackResult& r) {
        return "PullbackResult(" + std::to_string(r.lamination.size()) +
               " leaves)";
      });

  py::class_<GapfreeFamily>(m, "GapfreeFamily")
      .def_readonly("lamination", &GapfreeFamily::lamination)
      .def_readonly("sawtooth_ok", &GapfreeFamily::sawtooth_ok)
      .def_readonly("parameter_map", &GapfreeFamily::parameter_map);

  py::class_<HexagonExample>(m, "HexagonExample")
      .def_readonly("lamination", &HexagonExample::lamination)
      .def_readonly("base", &HexagonExample::base)
      .def_readonly("witness", &HexagonExample::witness)
      .def_readonly("inserted", &HexagonExample::inserted)
      .def_readonly("provenance", &HexagonExample::provenance);

  py::class_<ConvergingTuples>(m, "ConvergingTuples")
      .def_readonly("collections", &ConvergingTuples::collections)
      .def_readonly("limit", &ConvergingTuples::limit)
      .def_readonly("images", &ConvergingTuples::images);

  // circle maps
  m.def("sigma", &sigma, py::arg("degree"), py::arg("angle"));
  m.def("preimages", &preimages, py::arg("degree"), py::arg("angle"));
  m.def("in_cyclic_order", &in_cyclic_order, py::arg("a"), py::arg("b"),
        py::arg("c"));
  m.def("orbit_info", &orbit_info, py::arg("degree"), py::arg("angle"));
  m.def("ccw_dist",
        [](const Angle& from, const Angle& to) {
          return to_fraction(ccw_dist(from, to));
        },
        py::arg("from_"), py::arg("to"));
  m.def("circle_dist",
        [](const Angle& a, const Angle& b) {
          return to_fraction(circle_dist(a, b));
        },
        py::arg("a"), py::arg("b"));

  // chords
  m.def("chord_image", &chord_image, py::arg("degree"), py::arg("chord"));
  m.def("is_critical", &is_critical, py::arg("degree"), py::arg("chord"));
  m.def("crosses", &crosses, py::arg("c1"), py::arg("c2"));
  m.def("same_orientation", &same_orientation, py::arg("degree"),
        py::arg("a_set"), py::arg("b_set"));
  m.def("full_preimage_collections", &full_preimage_collections,
        py::arg("degree"), py::arg("chord"));

  // laminations
  m.def("validate", &validate, py::arg("lamination"));
  m.def("sibling_collections", &sibling_collections, py::arg("lamination"),
        py::arg("leaf"));
  m.def("auto_frontier",
        [](const Lamination& l) { return frontier_chords(auto_frontier(l)); },
        py::arg("lamination"));
  m.def("check_sibling_invariant",
        [](const Lamination& l, const std::optional<std::vector<Chord>>& frontier) {
          if (frontier) return check_sibling_invariant(l, frontier_from(frontier));
          return check_sibling_invariant(l);
        },
        py::arg("lamination"), py::arg("frontier") = py::none());
  m.def("check_thurston",
        [](const Lamination& l, const std::optional<std::vector<Chord>>& frontier) {
          if (frontier) return check_thurston(l, frontier_from(frontier));
          return check_thurston(l);
        },
        py::arg("lamination"), py::arg("frontier") = py::none());
  m.def("gaps", &gaps, py::arg("lamination"));
  m.def("check_gap_invariance", &check_gap_invariance, py::arg("lamination"),
        py::arg("gap"));
  m.def("collapsing_components", &collapsing_components, py::arg("lamination"),
        py::arg("m"));
  m.def("critical_wedges", &critical_wedges, py::arg("lamination"));
  m.def("is_proper", &is_proper, py::arg("lamination"));
  m.def("is_clean", &is_clean, py::arg("lamination"));
  m.def("convex_hulls_disjoint", &convex_hulls_disjoint, py::arg("a_pts"),
        py::arg("b_pts"));
  m.def("is_wandering", &is_wandering, py::arg("degree"), py::arg("points"),
        py::arg("depth"));
  m.def("hausdorff_distance",
        [](const Lamination& l1, const Lamination& l2) {
          return to_fraction(hausdorff_distance(l1, l2));
        },
        py::arg("l1"), py::arg("l2"));

  // equivalences
  m.def("finite_classes", &finite_classes, py::arg("lamination"));
  m.def("check_laminational_equivalence", &check_laminational_equivalence,
        py::arg("degree"), py::arg("partition"));
  m.def("q_lamination_from", &q_lamination_from, py::arg("degree"),
        py::arg("partition"));
  m.def("is_q_lamination", &is_q_lamination, py::arg("lamination"));
  m.def("critical_splitting", &critical_splitting, py::arg("lamination"));
  m.def("classify", &classify, py::arg("lamination"));

  // generators
  m.def("pullback",
        [](const Lamination& seed, const CriticalPortrait& portrait, int depth,
           bool include_portrait) {
          return pullback({seed, portrait, depth, include_portrait});
        },
        py::arg("seed"), py::arg("portrait"), py::arg("depth"),
        py::arg("include_portrait") = false);
  m.def("gapfree_family", &gapfree_family, py::arg("degree"), py::arg("depth"));
  m.def("hexagon_example", &hexagon_example);
  m.def("hexagon_search", &hexagon_search, py::arg("degree"),
        py::arg("max_den"));
  m.def("converging_sibling_tuples", &converging_sibling_tuples,
        py::arg("degree"), py::arg("limit_image"), py::arg("count"));
  m.def("preset_names", &preset_names);
  m.def("presets", &presets, py::arg("name"), py::arg("depth"));

  // serialization and rendering
  m.def("parse_lamination", &parse_lamination, py::arg("text"),
        py::arg("check_crossings") = true);
  m.def("serialize_lamination", &serialize_lamination, py::arg("lamination"));
  m.def("serialize_lamination_json", &serialize_lamination_json,
        py::arg("lamination"));
  m.def("parse_partition", &parse_partition, py::arg("text"));
  m.def("render_svg",
        [](const Lamination& l, bool hyperbolic, bool label, int size) {
          return render_svg(l, RenderOptions{hyperbolic, label, size});
        },
        py::arg("lamination"), py::arg("hyperbolic") = false,
        py::arg("label") = false, py::arg("size") = 512);

  m.attr("__all__") = py::make_tuple(
      "Angle", "OrbitInfo", "Chord", "ChordOrPoint", "Lamination",
      "ClassificationReport", "WitnessedBool", "GapSide", "Gap",
      "GapImageVerdict", "CollapsingComponent", "CriticalWedge", "Partition",
      "EquivalenceReport", "SplittingVerdict", "CriticalPortrait",
      "PullbackResult", "GapfreeFamily", "HexagonExample", "ConvergingTuples",
      "ParseError", "sigma", "preimages", "in_cyclic_order", "orbit_info",
      "ccw_dist", "circle_dist", "chord_image", "is_critical", "crosses",
      "same_orientation", "full_preimage_collections", "validate",
      "sibling_collections", "auto_frontier", "check_sibling_invariant",
      "check_thurston", "gaps", "check_gap_invariance", "collapsing_components",
      "critical_wedges", "is_proper", "is_clean", "convex_hulls_disjoint",
      "is_wandering", "hausdorff_distance", "finite_classes",
      "check_laminational_equivalence", "q_lamination_from", "is_q_lamination",
      "critical_splitting", "classify", "pullback", "gapfree_family",
      "hexagon_example", "hexagon_search", "converging_sibling_tuples",
      "preset_names", "presets", "parse_lamination", "serialize_lamination",
      "serialize_lamination_json", "parse_partition", "render_svg");
}
