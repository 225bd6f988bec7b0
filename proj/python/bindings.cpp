#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "polarwords/acceptance.hpp"
#include "polarwords/bijection.hpp"
#include "polarwords/errors.hpp"
#include "polarwords/gf2.hpp"
#include "polarwords/language.hpp"
#include "polarwords/nset.hpp"
#include "polarwords/polarspace.hpp"

namespace py = pybind11;
namespace pw = polarwords;

namespace {

// Words cross the boundary as digit strings.
std::vector<std::string> word_strings(const std::vector<pw::Word>& ws) {
  std::vector<std::string> out;
  out.reserve(ws.size());
  for (const auto& w : ws) out.push_back(w.to_string());
  return out;
}

std::vector<std::string> basis_strings(const pw::Gf2Subspace& v) {
  std::vector<std::string> out;
  for (const auto& r : v.basis()) out.push_back(r.to_string());
  return out;
}

pw::Gf2Subspace subspace_from(const std::string& text, std::optional<int> ambient) {
  return ambient ? pw::Gf2Subspace::parse(text, *ambient) : pw::Gf2Subspace::parse(text);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Core of the polarwords package";

  py::register_exception<pw::GuardError>(m, "GuardError", PyExc_ValueError);
  py::register_exception<pw::ConsistencyError>(m, "ConsistencyError", PyExc_RuntimeError);

  py::class_<pw::CaseLabel>(m, "CaseLabel")
      .def_readonly("number", &pw::CaseLabel::number)
      .def_property_readonly("subcase",
                             [](const pw::CaseLabel& c) -> std::optional<std::string> {
                               if (char s = pw::subcase_char(c.subcase)) return std::string(1, s);
                               return std::nullopt;
                             })
      .def("__str__", &pw::CaseLabel::to_string)
      .def("__repr__", [](const pw::CaseLabel& c) { return "CaseLabel('" + c.to_string() + "')"; });

  py::class_<pw::Gf2Subspace>(m, "Subspace")
      .def(py::init(&subspace_from), py::arg("text"), py::arg("ambient_dim") = py::none(),
           "Rows as 0/1 strings joined by ';'")
      .def_property_readonly("ambient_dim", &pw::Gf2Subspace::ambient_dim)
      .def_property_readonly("dim", &pw::Gf2Subspace::dim)
      .def_property_readonly("basis", &basis_strings)
      .def("__contains__", [](const pw::Gf2Subspace& v, const std::string& x) {
        return v.contains(pw::Gf2Vector::parse(x));
      })
      .def("__str__", &pw::Gf2Subspace::to_string)
      .def("__repr__", [](const pw::Gf2Subspace& v) { return "Subspace('" + v.to_string() + "')"; })
      .def("__eq__", [](const pw::Gf2Subspace& a, const pw::Gf2Subspace& b) { return a == b; })
      .def("__lt__", [](const pw::Gf2Subspace& a, const pw::Gf2Subspace& b) { return a < b; })
      .def("__hash__", [](const pw::Gf2Subspace& v) { return pw::Gf2SubspaceHash{}(v); });

  m.def("g", &pw::g, py::arg("n"));
  m.def("count_words", &pw::count_words, py::arg("n"));
  m.def("enumerate_words", [](int n) { return word_strings(pw::enumerate_words(n)); }, py::arg("n"));
  m.def("classify_word", [](const std::string& w) { return pw::classify_word(pw::Word::parse(w)); },
        py::arg("word"));
  m.def(
      "word_reduce",
      [](const std::string& w) {
        auto r = pw::word_reduce(pw::Word::parse(w));
        return py::make_tuple(r.label, r.word.to_string());
      },
      py::arg("word"), "Returns (case label, shorter word)");
  m.def(
      "word_expand",
      [](const std::string& w, int target_case) {
        return word_strings(pw::word_expand(pw::Word::parse(w), target_case));
      },
      py::arg("word"), py::arg("target_case"));

  m.def("enumerate_subspaces", &pw::enumerate_subspaces, py::arg("n"), py::arg("dim") = py::none());
  m.def(
      "is_N",
      [](const pw::Gf2Subspace& v) -> std::optional<std::pair<std::string, std::vector<int>>> {
        auto rep = pw::is_N(v);
        if (rep.passes) return std::nullopt;
        return std::make_pair(pw::to_string(rep.violated->condition), rep.violated->witnesses);
      },
      py::arg("subspace"), "None if the subspace is in N^n, else (condition, witness positions)");
  m.def("in_N", &pw::in_N, py::arg("subspace"));
  m.def("enumerate_N", &pw::enumerate_N, py::arg("n"), py::arg("threads") = 1,
        py::call_guard<py::gil_scoped_release>());
  m.def("classify_subspace", &pw::classify_subspace, py::arg("subspace"));
  m.def(
      "subspace_reduce",
      [](const pw::Gf2Subspace& v) {
        auto r = pw::subspace_reduce(v);
        return py::make_tuple(r.label, pw::to_string(r.move), r.subspace);
      },
      py::arg("subspace"), "Returns (case label, move name, reduced subspace)");
  m.def("subspace_expand", &pw::subspace_expand, py::arg("subspace"), py::arg("target_case"));

  m.def("word_to_subspace", [](const std::string& w) { return pw::word_to_subspace(pw::Word::parse(w)); },
        py::arg("word"));
  m.def("subspace_to_word", [](const pw::Gf2Subspace& v) { return pw::subspace_to_word(v).to_string(); },
        py::arg("subspace"));

  py::class_<pw::BijectionReport>(m, "BijectionReport")
      .def_readonly("n", &pw::BijectionReport::n)
      .def_readonly("words", &pw::BijectionReport::words)
      .def_readonly("subspaces", &pw::BijectionReport::subspaces)
      .def_readonly("matched", &pw::BijectionReport::matched)
      .def_readonly("injective", &pw::BijectionReport::injective)
      .def_readonly("surjective", &pw::BijectionReport::surjective)
      .def_readonly("inverse_consistent", &pw::BijectionReport::inverse_consistent)
      .def_readonly("case_compatible", &pw::BijectionReport::case_compatible)
      .def_readonly("case_counts", &pw::BijectionReport::case_counts)
      .def_readonly("counterexamples", &pw::BijectionReport::counterexamples)
      .def_property_readonly("passed", &pw::BijectionReport::passed)
      .def("__str__", &pw::BijectionReport::summary);
  m.def("verify_bijection", &pw::verify_bijection, py::arg("n"), py::arg("threads") = 1,
        py::call_guard<py::gil_scoped_release>());

  m.def("symplectic_form",
        [](const std::string& u, const std::string& v, int n) {
          return static_cast<int>(pw::symplectic_form(pw::Gf2Vector::parse(u), pw::Gf2Vector::parse(v), n));
        },
        py::arg("u"), py::arg("v"), py::arg("n"));

  py::class_<pw::PolarGeometry>(m, "PolarGeometry")
      .def_readonly("n", &pw::PolarGeometry::n)
      .def_readonly("points", &pw::PolarGeometry::points)
      .def_readonly("lines", &pw::PolarGeometry::lines)
      .def_readonly("incidence", &pw::PolarGeometry::incidence)
      .def("point_index", &pw::PolarGeometry::point_index);
  m.def("build_geometry", &pw::build_geometry, py::arg("n"), py::arg("threads") = 1,
        py::call_guard<py::gil_scoped_release>());
  m.def("udim", py::overload_cast<const pw::PolarGeometry&>(&pw::udim), py::arg("geometry"));
  m.def("udim", py::overload_cast<int, int>(&pw::udim), py::arg("n"), py::arg("threads") = 1);

  py::class_<pw::StrataReport>(m, "StrataReport")
      .def_readonly("base_point", &pw::StrataReport::base_point)
      .def_readonly("strata", &pw::StrataReport::strata)
      .def_readonly("components", &pw::StrataReport::components)
      .def_readonly("distance_matches", &pw::StrataReport::distance_matches)
      .def_readonly("line_fact", &pw::StrataReport::line_fact)
      .def_readonly("component_bijection", &pw::StrataReport::component_bijection)
      .def_property_readonly("passed", &pw::StrataReport::passed);
  m.def("strata", &pw::strata, py::arg("geometry"), py::arg("x0"));
  m.def(
      "quotient_basis",
      [](const pw::PolarGeometry& geo) {
        auto q = pw::quotient_basis(geo);
        return py::make_tuple(q.points, q.certificate_rank);
      },
      py::arg("geometry"), "Returns (point indices, certificate rank)");
  m.def(
      "export_incidence",
      [](const pw::PolarGeometry& geo, const std::string& format) {
        return pw::export_incidence(geo, pw::parse_incidence_format(format));
      },
      py::arg("geometry"), py::arg("format"));

  m.def(
      "run_criterion",
      [](int id, int threads) {
        pw::CriterionResult r;
        {
          py::gil_scoped_release release;
          r = pw::run_criterion(id, threads);
        }
        return py::make_tuple(r.passed(), r.line());
      },
      py::arg("id"), py::arg("threads") = 1, "Returns (passed, report line)");
}
