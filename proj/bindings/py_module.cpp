#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "uebforge/catalog.hpp"
#include "uebforge/hadamard.hpp"
#include "uebforge/json_io.hpp"
#include "uebforge/matrix.hpp"
#include "uebforge/obstructions.hpp"
#include "uebforge/qls.hpp"
#include "uebforge/reproduce.hpp"
#include "uebforge/ueb.hpp"

namespace py = pybind11;
using namespace uebforge;

namespace {

std::vector<std::vector<Complex>> matrix_rows(const Matrix& m) {
  std::vector<std::vector<Complex>> rows(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) rows[i].push_back(m(i, j));
  return rows;
}

Provenance provenance_arg(const std::string& name) {
  auto p = provenance_from_name(name);
  if (!p) throw std::invalid_argument("unknown provenance tag \"" + name + "\"");
  return *p;
}

}  // namespace

PYBIND11_MODULE(uebforge, m) {
  m.doc() =
      "Unitary error bases from quantum Latin squares and complex Hadamard "
      "matrices: constructions, validators, inequivalence obstructions and "
      "the reproduction suite.";

  py::register_exception<ValidationError>(m, "ValidationError");

  py::class_<Matrix>(m, "Matrix")
      .def(py::init([](const std::vector<std::vector<Complex>>& rows) {
             return Matrix::from_rows(rows);
           }),
           py::arg("rows"))
      .def_static("identity", &Matrix::identity, py::arg("n"))
      .def_property_readonly("n", &Matrix::size)
      .def("to_list", &matrix_rows)
      .def("__getitem__",
           [](const Matrix& a, std::pair<std::size_t, std::size_t> ij) {
             return a.at(ij.first, ij.second);
           })
      .def("__eq__", [](const Matrix& a, const Matrix& b) { return a == b; })
      .def("__repr__", [](const Matrix& a) {
        return "Matrix(n=" + std::to_string(a.size()) + ")";
      });

  py::class_<HadamardMatrix>(m, "HadamardMatrix")
      .def_property_readonly("n", &HadamardMatrix::size)
      .def_property_readonly("matrix", &HadamardMatrix::matrix)
      .def("__repr__", [](const HadamardMatrix& h) {
        return "HadamardMatrix(n=" + std::to_string(h.size()) + ")";
      });

  py::class_<QuantumLatinSquare>(m, "QuantumLatinSquare")
      .def_property_readonly("n", &QuantumLatinSquare::size)
      .def_property_readonly("rows", &QuantumLatinSquare::rows)
      .def("row", &QuantumLatinSquare::row, py::arg("i"))
      .def("entry", &QuantumLatinSquare::entry, py::arg("i"), py::arg("j"))
      .def("coefficient", &QuantumLatinSquare::coefficient, py::arg("i"),
           py::arg("j"), py::arg("k"))
      .def("__repr__", [](const QuantumLatinSquare& q) {
        return "QuantumLatinSquare(n=" + std::to_string(q.size()) + ")";
      });

  py::class_<ClassicalLatinSquare>(m, "ClassicalLatinSquare")
      .def_property_readonly("n", &ClassicalLatinSquare::size)
      .def_property_readonly("grid", &ClassicalLatinSquare::grid)
      .def("__repr__", [](const ClassicalLatinSquare& l) {
        return "ClassicalLatinSquare(n=" + std::to_string(l.size()) + ")";
      });

  py::class_<UnitaryErrorBasis>(m, "UnitaryErrorBasis")
      .def_property_readonly("n", &UnitaryErrorBasis::dim)
      .def_property_readonly("elements", &UnitaryErrorBasis::elements)
      .def("element",
           py::overload_cast<std::size_t>(&UnitaryErrorBasis::element,
                                          py::const_),
           py::arg("flat"))
      .def("element",
           py::overload_cast<std::size_t, std::size_t>(
               &UnitaryErrorBasis::element, py::const_),
           py::arg("i"), py::arg("j"))
      .def_property_readonly(
          "provenance",
          [](const UnitaryErrorBasis& b) { return provenance_name(b.provenance()); })
      .def("__len__",
           [](const UnitaryErrorBasis& b) { return b.elements().size(); })
      .def("__repr__", [](const UnitaryErrorBasis& b) {
        return "UnitaryErrorBasis(n=" + std::to_string(b.dim()) +
               ", provenance=" + provenance_name(b.provenance()) + ")";
      });

  py::class_<ObstructionReport>(m, "ObstructionReport")
      .def_property_readonly(
          "verdict", [](const ObstructionReport& r) { return verdict_name(r.verdict); })
      .def_readonly("test", &ObstructionReport::test)
      .def_readonly("witness_pair", &ObstructionReport::witness_pair)
      .def_readonly("witness_norm", &ObstructionReport::witness_norm)
      .def_readonly("witness_element", &ObstructionReport::witness_element)
      .def_readonly("theta", &ObstructionReport::theta)
      .def_readonly("eps", &ObstructionReport::eps)
      .def_property_readonly(
          "obstructed",
          [](const ObstructionReport& r) { return r.verdict == Verdict::obstructed; })
      .def("__repr__", [](const ObstructionReport& r) {
        return "ObstructionReport(test=" + r.test +
               ", verdict=" + verdict_name(r.verdict) + ")";
      });

  py::class_<CheckResult>(m, "CheckResult")
      .def_readonly("name", &CheckResult::name)
      .def_readonly("group", &CheckResult::group)
      .def_readonly("detail", &CheckResult::detail)
      .def_readonly("pass_", &CheckResult::pass)
      .def_property_readonly("passed",
                             [](const CheckResult& r) { return r.pass; })
      .def_readonly("measured", &CheckResult::measured)
      .def_readonly("tolerance", &CheckResult::tolerance)
      .def("__repr__", [](const CheckResult& r) {
        return "CheckResult(name=" + r.name +
               (r.pass ? ", pass)" : ", FAIL)");
      });

  // elementary operations
  m.def("compose", &compose, py::arg("a"), py::arg("b"));
  m.def("adjoint", &adjoint, py::arg("a"));
  m.def("transpose", &transpose, py::arg("a"));
  m.def("trace", &trace, py::arg("a"));
  m.def("hs_inner", &hs_inner, py::arg("a"), py::arg("b"));
  m.def("max_abs_diff", &max_abs_diff, py::arg("a"), py::arg("b"));
  m.def("frobenius", &frobenius, py::arg("a"));
  m.def("power", &power, py::arg("a"), py::arg("k"));
  m.def(
      "is_unitary",
      [](const Matrix& a, double eps) { return is_unitary(a, Tolerance{eps}); },
      py::arg("a"), py::arg("eps") = 1e-9);
  m.def("mu", &mu, py::arg("n"));
  m.def("random_unitary", &random_unitary, py::arg("n"), py::arg("seed"));
  m.def(
      "proportional",
      [](const Matrix& a, const Matrix& b, double eps) {
        return proportional(a, b, Tolerance{eps});
      },
      py::arg("a"), py::arg("b"), py::arg("eps") = 1e-9);

  // Hadamard matrices
  m.def("fourier", &fourier, py::arg("n"));
  m.def("h_alpha", &h_alpha, py::arg("alpha"));
  m.def(
      "validate_hadamard",
      [](const Matrix& a, double eps) {
        return validate_hadamard(a, Tolerance{eps});
      },
      py::arg("matrix"), py::arg("eps") = 1e-9);
  m.def("hadamard_deviation", &hadamard_deviation, py::arg("matrix"));

  // quantum and classical Latin squares
  m.def(
      "validate_qls",
      [](std::vector<Matrix> rows, double eps) {
        return validate_qls(std::move(rows), Tolerance{eps});
      },
      py::arg("rows"), py::arg("eps") = 1e-9);
  m.def("qls_deviation", &qls_deviation, py::arg("rows"));
  m.def("validate_latin", &validate_latin, py::arg("grid"));
  m.def("from_classical", &from_classical, py::arg("latin"));
  m.def(
      "is_classical",
      [](const QuantumLatinSquare& q, double eps, bool strict) {
        return is_classical(q, Tolerance{eps}, strict);
      },
      py::arg("qls"), py::arg("eps") = 1e-9, py::arg("strict") = false);
  m.def(
      "qls_from_hadamard",
      [](const HadamardMatrix& h, double eps) {
        return qls_from_hadamard(h, Tolerance{eps});
      },
      py::arg("hadamard"), py::arg("eps") = 1e-9);

  // unitary error bases
  m.def(
      "validate_ueb",
      [](std::vector<Matrix> elements, const std::string& provenance,
         double eps) {
        return validate_ueb(std::move(elements), provenance_arg(provenance),
                            Tolerance{eps});
      },
      py::arg("elements"), py::arg("provenance") = "manual",
      py::arg("eps") = 1e-9);
  m.def("ueb_deviation", &ueb_deviation, py::arg("elements"));
  m.def(
      "qsm",
      [](const QuantumLatinSquare& q, const std::vector<HadamardMatrix>& hs,
         double eps) { return qsm(q, hs, Tolerance{eps}); },
      py::arg("qls"), py::arg("hadamards"), py::arg("eps") = 1e-9);
  m.def(
      "sm",
      [](const ClassicalLatinSquare& l, const std::vector<HadamardMatrix>& hs,
         double eps) { return sm(l, hs, Tolerance{eps}); },
      py::arg("latin"), py::arg("hadamards"), py::arg("eps") = 1e-9);
  m.def(
      "hadamard_basis",
      [](const HadamardMatrix& h, double eps) {
        return hadamard_basis(h, Tolerance{eps});
      },
      py::arg("hadamard"), py::arg("eps") = 1e-9);
  m.def(
      "nice_basis_clock_shift",
      [](std::size_t n, double eps) {
        return nice_error_basis(clock_shift_rep(n), Tolerance{eps});
      },
      py::arg("n"), py::arg("eps") = 1e-9);
  m.def(
      "nice_basis_pauli",
      [](double eps) { return nice_error_basis(pauli_rep(), Tolerance{eps}); },
      py::arg("eps") = 1e-9);

  // monomial structure and obstructions
  m.def(
      "is_monomial",
      [](const Matrix& a, double eps) { return is_monomial(a, Tolerance{eps}); },
      py::arg("a"), py::arg("eps") = 1e-9);
  m.def(
      "monomial_decompose",
      [](const Matrix& a, double eps)
          -> std::optional<std::pair<Matrix, std::vector<std::size_t>>> {
        auto md = monomial_decompose(a, Tolerance{eps});
        if (!md) return std::nullopt;
        return std::make_pair(md->d, md->p.image());
      },
      py::arg("a"), py::arg("eps") = 1e-9,
      "Returns (diagonal, permutation image) with a == diagonal o "
      "permutation, or None.");
  m.def(
      "monomializes",
      [](const Matrix& u, const std::vector<Matrix>& family, double eps) {
        return monomializes(u, family, Tolerance{eps});
      },
      py::arg("u"), py::arg("family"), py::arg("eps") = 1e-9);
  m.def(
      "mu_power_commutator_obstruction",
      [](const UnitaryErrorBasis& b, double theta, double eps) {
        return mu_power_commutator_obstruction(b, NonzeroThreshold{theta},
                                               Tolerance{eps});
      },
      py::arg("basis"), py::arg("theta") = 1e-3, py::arg("eps") = 1e-9);
  m.def(
      "adjoint_closure_obstruction",
      [](const UnitaryErrorBasis& b, double eps, double theta) {
        return adjoint_closure_obstruction(b, Tolerance{eps},
                                           NonzeroThreshold{theta});
      },
      py::arg("basis"), py::arg("eps") = 1e-9, py::arg("theta") = 1e-3);

  // embedded reference objects
  m.def("example_qls", &example_qls);
  m.def("example_hadamard", &example_hadamard);
  m.def("basis_M", &basis_M);
  m.def("matrix_Y", &matrix_Y);
  m.def("basis_F_prime", &basis_F_prime, py::arg("alpha"));
  m.def("fixture_names", [] {
    std::vector<std::string> names;
    for (const Fixture& f : fixtures()) names.push_back(f.name);
    return names;
  });
  m.def("fixture_canonical_json", &fixture_canonical_json, py::arg("name"));

  // JSON interchange
  m.def("serialize_matrix", &serialize_matrix, py::arg("matrix"));
  m.def("serialize_qls", &serialize_qls, py::arg("qls"));
  m.def("serialize_latin", &serialize_latin, py::arg("latin"));
  m.def("serialize_ueb", &serialize_ueb, py::arg("ueb"));
  m.def("serialize_report", &serialize_report, py::arg("report"));
  m.def("parse_matrix", &parse_matrix, py::arg("text"));
  m.def("parse_qls_rows", &parse_qls_rows, py::arg("text"));
  m.def("parse_latin_grid", &parse_latin_grid, py::arg("text"));
  m.def(
      "parse_ueb",
      [](const std::string& text, double eps) {
        RawUeb raw = parse_ueb_raw(text);
        return validate_ueb(std::move(raw.elements), raw.provenance,
                            Tolerance{eps});
      },
      py::arg("text"), py::arg("eps") = 1e-9);

  // reproduction suite
  m.def(
      "run_reproduction",
      [](double eps, double theta, std::uint64_t seed, const std::string& only) {
        ReproOptions o;
        o.eps = eps;
        o.theta = theta;
        o.seed = seed;
        o.only = only;
        return run_reproduction(o);
      },
      py::arg("eps") = 1e-9, py::arg("theta") = 1e-3,
      py::arg("seed") = 20240612, py::arg("only") = "");
  m.def("reproduction_check_names", [] { return reproduction_check_names(); });
}
