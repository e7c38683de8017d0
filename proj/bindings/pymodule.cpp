#include <pybind11/pybind11.h>
#include <pybind11/operators.h>
#include <pybind11/stl.h>

#include "magiclab/acceptance.hpp"
#include "magiclab/json_io.hpp"
#include "magiclab/transforms.hpp"

namespace py = pybind11;
using namespace magiclab;
using nlohmann::json;

namespace {

// JSON strings are the lingua franca between the C++ structs and python;
// they match the CLI payloads exactly.
std::string dump(const json& j) { return j.dump(); }

TotalLabeling labeling_from_str(const std::string& s) {
  return labeling_from_json(json::parse(s));
}

}  // namespace

PYBIND11_MODULE(_magiclab, m) {
  m.doc() = "edge-magic labeled digraphs: constructions, transforms, oracles";

  py::register_exception<SchemaError>(m, "SchemaError", PyExc_ValueError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<InvariantError>(m, "InvariantError", PyExc_RuntimeError);

  py::class_<Arc>(m, "Arc")
      .def(py::init<int, int>(), py::arg("from_vertex"), py::arg("to_vertex"))
      .def_readonly("from_vertex", &Arc::from)
      .def_readonly("to_vertex", &Arc::to)
      .def(py::self == py::self)
      .def("__repr__", [](const Arc& a) {
        return "Arc(" + std::to_string(a.from) + ", " + std::to_string(a.to) + ")";
      });

  py::class_<Digraph>(m, "Digraph")
      .def(py::init<int, std::vector<Arc>>(), py::arg("order"), py::arg("arcs"))
      .def_property_readonly("order", &Digraph::order)
      .def_property_readonly("size", &Digraph::size)
      .def_property_readonly("arcs", [](const Digraph& d) { return d.arcs(); })
      .def("has_arc", &Digraph::has_arc)
      .def(py::self == py::self)
      .def("to_json", [](const Digraph& d) { return dump(json_of(d)); })
      .def_static("from_json", [](const std::string& s) {
        return digraph_from_json(json::parse(s));
      })
      .def_static("from_spec", &graph_from_spec, py::arg("spec"),
                  "parse cycle:n / path:n / a JSON file path");

  m.def("directed_cycle", &directed_cycle, py::arg("n"));
  m.def("reversed_cycle", &reversed_cycle, py::arg("n"));
  m.def("directed_path", &directed_path, py::arg("n"));
  m.def("reversed", &reversed, py::arg("d"));

  py::class_<TotalLabeling>(m, "TotalLabeling")
      .def(py::init<>())
      .def_readwrite("graph", &TotalLabeling::graph)
      .def_readwrite("vertex_labels", &TotalLabeling::vertex_labels)
      .def_readwrite("arc_labels", &TotalLabeling::arc_labels)
      .def("vertex_label", &TotalLabeling::vertex_label)
      .def("validate", &TotalLabeling::validate)
      .def("to_json", [](const TotalLabeling& f) { return dump(json_of(f)); })
      .def_static("from_json", &labeling_from_str);

  m.def("valence_if_edge_magic", &valence_if_edge_magic, py::arg("f"));
  m.def("is_super_edge_magic", &is_super_edge_magic, py::arg("f"));
  m.def("extend_to_super_edge_magic", &extend_to_super_edge_magic,
        py::arg("g"), "extend a vertex bijection with consecutive sums");
  m.def("labeled_equal", &labeled_equal, py::arg("a"), py::arg("b"));

  m.def("em_complement", &em_complement, py::arg("f"));
  m.def("sem_complement", &sem_complement, py::arg("f"));
  m.def("odd_labeling", &odd_labeling, py::arg("f"));
  m.def("even_labeling", &even_labeling, py::arg("f"));
  m.def("odd_even_complement_duality", &odd_even_complement_duality, py::arg("f"));

  py::class_<SFamilyMember>(m, "SFamilyMember")
      .def_readonly("p", &SFamilyMember::p)
      .def_readonly("k", &SFamilyMember::k)
      .def_readonly("digraph", &SFamilyMember::digraph)
      .def(py::self == py::self)
      .def("to_json", [](const SFamilyMember& s) { return dump(json_of(s)); })
      .def_static("from_json", [](const std::string& s) {
        return s_member_from_json(json::parse(s));
      });

  py::class_<TFamilyMember>(m, "TFamilyMember")
      .def_readonly("label_universe", &TFamilyMember::label_universe)
      .def_readonly("vertex_set", &TFamilyMember::vertex_set)
      .def_readonly("sigma", &TFamilyMember::sigma)
      .def_readonly("arcs", &TFamilyMember::arcs)
      .def(py::self == py::self)
      .def("to_json", [](const TFamilyMember& t) { return dump(json_of(t)); })
      .def_static("from_json", [](const std::string& s) {
        return t_member_from_json(json::parse(s));
      });

  m.def("check_s_member", &check_s_member, py::arg("d"), py::arg("p"));
  m.def("make_s_member", &make_s_member, py::arg("d"));
  m.def("enumerate_s1regular", &enumerate_s1regular, py::arg("p"));
  m.def("s_member_from_labeling", &s_member_from_labeling, py::arg("f"));
  m.def("t_member_from_labeling", &t_member_from_labeling, py::arg("f"));
  m.def("labeling_from_t_member", &labeling_from_t_member, py::arg("t"));
  m.def("phi_reflect", [](const SFamilyMember& s) { return phi_reflect(s); });
  m.def("psi_reflect", [](const TFamilyMember& t) { return psi_reflect(t); });
  m.def("reverse_s_member", [](const SFamilyMember& s) { return reverse_member(s); });
  m.def("reverse_t_member", [](const TFamilyMember& t) { return reverse_member(t); });

  py::class_<ValenceReport>(m, "ValenceReport")
      .def_readonly("valences", &ValenceReport::valences)
      .def_readonly("certificates", &ValenceReport::certificates)
      .def("to_json", [](const ValenceReport& r) { return dump(json_of(r)); });

  m.def("exhaustive_edge_magic", &exhaustive_edge_magic, py::arg("d"),
        py::arg("guard") = std::nullopt,
        py::call_guard<py::gil_scoped_release>());
  m.def("exhaustive_super_edge_magic", &exhaustive_super_edge_magic, py::arg("d"),
        py::arg("guard") = std::nullopt,
        py::call_guard<py::gil_scoped_release>());
  m.def("all_super_edge_magic_labelings", &all_super_edge_magic_labelings,
        py::arg("d"), py::arg("guard") = std::nullopt,
        py::call_guard<py::gil_scoped_release>());
  m.def("count_sem_one_regular", &count_sem_one_regular, py::arg("p"),
        py::call_guard<py::gil_scoped_release>());

  py::class_<LabeledProduct>(m, "LabeledProduct")
      .def_readonly("labeling", &LabeledProduct::labeling)
      .def_readonly("construction", &LabeledProduct::construction)
      .def_readonly("predicted_valence", &LabeledProduct::predicted_valence)
      .def("to_json", [](const LabeledProduct& r) { return dump(json_of(r)); });

  m.def("product_h",
        [](const Digraph& d, const Digraph& image) {
          return product_h(d, constant_assignment(d, image));
        },
        py::arg("d"), py::arg("image"),
        "tensor-like product with one image on every arc (Kronecker case)");
  m.def("product_h",
        [](const Digraph& d, const std::vector<Digraph>& images) {
          EdgeAssignment h{d, images};
          h.validate();
          return product_h(d, h);
        },
        py::arg("d"), py::arg("images"),
        "tensor-like product with per-arc images (parallel to d.arcs)");
  m.def("induced_spk",
        [](const TotalLabeling& f, const SFamilyMember& image) {
          return induced_spk(f, constant_assignment(f.graph, image));
        },
        py::arg("f"), py::arg("image"));
  m.def("induced_spk",
        [](const TotalLabeling& f, const std::vector<SFamilyMember>& images) {
          SEdgeAssignment h{f.graph, images};
          h.validate();
          return induced_spk(f, h);
        },
        py::arg("f"), py::arg("images"));
  m.def("induced_tqs",
        [](const SFamilyMember& d, const TFamilyMember& image) {
          return induced_tqs(d, constant_assignment(d.digraph, image));
        },
        py::arg("d"), py::arg("image"));
  m.def("induced_tqs",
        [](const SFamilyMember& d, const std::vector<TFamilyMember>& images) {
          TEdgeAssignment h{d.digraph, images};
          h.validate();
          return induced_tqs(d, h);
        },
        py::arg("d"), py::arg("images"));

  py::class_<OrientationAssignment>(m, "OrientationAssignment")
      .def_readonly("m", &OrientationAssignment::m)
      .def_readonly("n", &OrientationAssignment::n)
      .def_readonly("g", &OrientationAssignment::g)
      .def_readonly("reversed_arcs", &OrientationAssignment::reversed_arcs)
      .def("reversed_count", &OrientationAssignment::reversed_count);

  m.def("solve_ng", &solve_ng, py::arg("m"), py::arg("n"), py::arg("g"));
  m.def("cycle_product_structure", &cycle_product_structure, py::arg("assignment"));
  m.def("mcquillan_i", &mcquillan_i, py::arg("f"), py::arg("p"));
  m.def("mcquillan_ii", &mcquillan_ii, py::arg("f"), py::arg("p"));
  m.def("em_to_vmt", &em_to_vmt, py::arg("f"));
  m.def("vmt_to_em", &vmt_to_em, py::arg("f"));
  m.def("vertex_magic_weight", &vertex_magic_weight, py::arg("f"));
  m.def("godbold_slater_range", &godbold_slater_range, py::arg("n"));
  m.def("godbold_slater_report",
        [](int n, std::optional<int> budget) {
          return dump(json_of(godbold_slater_report(n, budget)));
        },
        py::arg("n"), py::arg("oracle_budget") = std::nullopt,
        "returns the coverage report as a JSON string");

  m.def("run_acceptance_suite", [] {
    py::list rows;
    for (const CriterionOutcome& o : run_acceptance_suite(nullptr)) {
      py::dict row;
      row["id"] = o.id;
      row["name"] = o.name;
      row["passed"] = o.passed;
      row["detail"] = o.detail;
      rows.append(std::move(row));
    }
    return rows;
  });
}
