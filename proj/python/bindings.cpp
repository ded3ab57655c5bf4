#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "molp/engine.hpp"
#include "molp/errors.hpp"
#include "molp/io.hpp"

namespace py = pybind11;

namespace {

// Rationals cross the boundary as fractions.Fraction; inputs may also be
// int or str ("3/4", "0.5").
py::object to_fraction(const molp::Rational& r) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(molp::to_string(r));
}

molp::Rational from_python(const py::handle& h) {
  if (py::isinstance<py::float_>(h)) {
    throw py::type_error("floats are not accepted; pass int, str or fractions.Fraction");
  }
  return molp::parse_rational(py::str(h).cast<std::string>());
}

py::list to_list(const molp::RatVector& v) {
  py::list out;
  for (const auto& x : v) out.append(to_fraction(x));
  return out;
}

py::list to_lists(const std::vector<molp::RatVector>& vs) {
  py::list out;
  for (const auto& v : vs) out.append(to_list(v));
  return out;
}

molp::RatVector vector_from(const py::sequence& seq) {
  molp::RatVector out;
  for (auto item : seq) out.push_back(from_python(item));
  return out;
}

molp::RatMatrix matrix_from(const py::sequence& rows, std::size_t cols) {
  molp::RatMatrix m(0, cols);
  for (auto row : rows) m.append_row(vector_from(py::reinterpret_borrow<py::sequence>(row)));
  return m;
}

py::object json_to_python(const nlohmann::json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

molp::MolpProblem make_problem(const py::sequence& objectives, const py::sequence& a,
                               const py::sequence& b, std::optional<std::vector<std::string>> names) {
  if (py::len(objectives) == 0) throw molp::DimensionError("no objectives given");
  const std::size_t k = py::len(objectives[0]);
  return molp::MolpProblem(matrix_from(objectives, k),
                           molp::Polytope(matrix_from(a, k), vector_from(b), k),
                           names.value_or(std::vector<std::string>{}));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Essential / nonessential objective detection for linear multiobjective programs";

  auto base = py::register_exception<molp::MolpError>(m, "MolpError");
  py::register_exception<molp::ParseError>(m, "ParseError", base.ptr());
  py::register_exception<molp::DimensionError>(m, "DimensionError", base.ptr());
  py::register_exception<molp::RelationError>(m, "RelationError", base.ptr());
  py::register_exception<molp::InfeasibleRegion>(m, "InfeasibleRegion", base.ptr());
  py::register_exception<molp::UnboundedRegion>(m, "UnboundedRegion", base.ptr());
  py::register_exception<molp::UnboundedObjective>(m, "UnboundedObjective", base.ptr());
  py::register_exception<molp::InfeasibleInput>(m, "InfeasibleInput", base.ptr());

  py::class_<molp::MolpProblem>(m, "Problem")
      .def(py::init(&make_problem), py::arg("objectives"), py::arg("a"), py::arg("b"),
           py::arg("names") = py::none(),
           "Objective rows, constraint rows of Ax <= b, and b. x >= 0 is implicit.")
      .def_static("from_json", [](const std::string& text) { return molp::parse_problem(text); })
      .def("to_json", [](const molp::MolpProblem& p) {
        return molp::serialize_document(molp::to_document(p));
      })
      .def_property_readonly("num_objectives", &molp::MolpProblem::num_objectives)
      .def_property_readonly("num_vars", &molp::MolpProblem::num_vars)
      .def_property_readonly("names", [](const molp::MolpProblem& p) { return p.names; })
      .def_property_readonly("objectives",
                             [](const molp::MolpProblem& p) { return to_lists(p.objectives.row_list()); });

  py::class_<molp::Verdict>(m, "Verdict")
      .def_property_readonly("outcome", [](const molp::Verdict& v) { return molp::to_string(v.outcome); })
      .def_readonly("decided_at", &molp::Verdict::decided_at)
      .def_readonly("candidate", &molp::Verdict::candidate)
      .def_readonly("candidate_name", &molp::Verdict::candidate_name)
      .def_readonly("relation", &molp::Verdict::relation)
      .def_property_readonly("trace",
                             [](const molp::Verdict& v) {
                               py::list out;
                               for (const auto& r : v.trace) out.append(py::make_tuple(r.step, r.answer));
                               return out;
                             })
      .def("to_dict", [](const molp::Verdict& v, bool certificates) {
        return json_to_python(molp::verdict_to_json(v, certificates));
      }, py::arg("certificates") = false)
      .def("__repr__", [](const molp::Verdict& v) {
        return "<Verdict " + v.candidate_name + " " + molp::to_string(v.outcome) + " at step " +
               std::to_string(v.decided_at) + ">";
      });

  m.def("classify",
        [](const molp::MolpProblem& p, std::optional<std::size_t> candidate, bool skip_gal_leberling) {
          return molp::classify(p, candidate.value_or(p.num_objectives() - 1),
                                {.skip_gal_leberling = skip_gal_leberling});
        },
        py::arg("problem"), py::arg("candidate") = py::none(), py::arg("skip_gal_leberling") = false,
        "Classify objective `candidate` (0-based; default last).");

  m.def("reduce", [](const molp::MolpProblem& p) { return json_to_python(molp::reduction_to_json(molp::reduce(p))); },
        py::arg("problem"), "Drop nonessential objectives; returns removed/survivors/history.");

  m.def("enumerate_vertices",
        [](const molp::MolpProblem& p) { return to_lists(molp::enumerate_vertices(p.region).vertices); },
        py::arg("problem"));

  m.def("optimal_face_vertices",
        [](const molp::MolpProblem& p, std::size_t objective) {
          return to_lists(molp::optimal_face_vertices(p.objectives.row(objective), p.region).vertices);
        },
        py::arg("problem"), py::arg("objective"));

  m.def("efficient_vertices",
        [](const molp::MolpProblem& p) {
          return to_lists(molp::efficient_vertices(p.objectives, p.region).vertices);
        },
        py::arg("problem"), "Vertices efficient for the full objective stack.");

  m.def("is_efficient",
        [](const molp::MolpProblem& p, const py::sequence& point) {
          return molp::is_efficient_vertex(vector_from(point), p.objectives, p.region);
        },
        py::arg("problem"), py::arg("point"));

  m.def("interior_nonempty", [](const molp::MolpProblem& p) { return molp::interior_nonempty(p.region); },
        py::arg("problem"));
  m.def("is_bounded", [](const molp::MolpProblem& p) { return molp::is_bounded(p.region); },
        py::arg("problem"));

  m.def("cone_nonempty",
        [](const py::sequence& rows) {
          const std::size_t k = py::len(rows) == 0 ? 0 : py::len(rows[0]);
          return molp::cone_nonempty(matrix_from(rows, k));
        },
        py::arg("rows"));

  m.def("null_space",
        [](const py::sequence& rows) {
          const std::size_t k = py::len(rows) == 0 ? 0 : py::len(rows[0]);
          return to_lists(molp::null_space(matrix_from(rows, k)));
        },
        py::arg("rows"));
}
