#include <cmath>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "uebforge/catalog.hpp"
#include "uebforge/json_io.hpp"
#include "uebforge/obstructions.hpp"

using namespace uebforge;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

}  // namespace

TEST_CASE("embedded objects match their defining values") {
  UnitaryErrorBasis m = basis_M();
  CHECK(m.element(0, 0) == Matrix::identity(4));
  double b = 1.0 / std::sqrt(5.0);
  CHECK(std::abs(m.element(2, 2)(0, 1) + 2.0 * b) <= 1e-15);
  // the first grid row lists the square's own row matrices
  for (std::size_t j = 0; j < 4; ++j)
    CHECK(m.element(0, j) == example_qls().row(j));

  double a = 1.0 / std::sqrt(2.0);
  Matrix y = matrix_Y();
  CHECK(std::abs(y(0, 2) + a) <= 1e-15);
  CHECK(unitarity_deviation(y) <= 1e-12);

  CHECK(max_abs_diff(example_hadamard().matrix(), fourier(4).matrix()) <=
        1e-12);
  CHECK(example_hadamard().matrix()(1, 1) == Complex(0, 1));
  // entrywise listing vs computed transcendentals: close, not bit-identical
  CHECK(example_hadamard().matrix() != fourier(4).matrix());
}

TEST_CASE("the monomial listing tracks its parameter") {
  UnitaryErrorBasis f = basis_F_prime(0.37);
  CHECK(f.element(0, 0) == Matrix::identity(4));
  CHECK(std::abs(f.element(0, 2)(1, 0) - std::polar(1.0, -2.0 * 0.37)) <=
        1e-12);
  for (const Matrix& e : f.elements()) CHECK(is_monomial(e));

  // conjugation by the fixed unitary reproduces the listing
  Matrix y = matrix_Y();
  UnitaryErrorBasis h = hadamard_basis(h_alpha(0.37));
  for (std::size_t k = 0; k < 16; ++k) {
    Matrix image = compose(y, compose(h.element(k), adjoint(y)));
    CHECK(max_abs_diff(image, f.element(k)) <= 1e-12);
  }
}

TEST_CASE("the fixture table is consistent with the constructors") {
  const auto& fx = fixtures();
  REQUIRE(fx.size() == 5);
  CHECK(fx[0].name == "example_qls");
  CHECK(fx[1].name == "mhad");
  CHECK(fx[2].name == "basis_M");
  CHECK(fx[3].name == "matrix_Y");
  CHECK(fx[4].name == "basis_F_prime_0");

  RawUeb raw = parse_ueb_raw(fixture_canonical_json("basis_M"));
  CHECK(raw.n == 4);
  CHECK(raw.provenance == Provenance::manual);
  CHECK(raw.elements == basis_M().elements());
  CHECK(parse_matrix(fixture_canonical_json("mhad")) ==
        example_hadamard().matrix());
  CHECK(parse_qls_rows(fixture_canonical_json("example_qls")) ==
        example_qls().rows());
  CHECK(parse_matrix(fixture_canonical_json("matrix_Y")) == matrix_Y());
  CHECK(parse_ueb_raw(fixture_canonical_json("basis_F_prime_0")).elements ==
        basis_F_prime(0.0).elements());
  CHECK_THROWS_AS(fixture_canonical_json("nope"), std::invalid_argument);
}

TEST_CASE("serialization round-trips bit-exactly") {
  Matrix m = example_hadamard().matrix();
  std::string s = serialize_matrix(m);
  CHECK(parse_matrix(s) == m);
  CHECK(serialize_matrix(parse_matrix(s)) == s);

  QuantumLatinSquare q = example_qls();
  std::string qs = serialize_qls(q);
  CHECK(parse_qls_rows(qs) == q.rows());
  CHECK(serialize_qls(validate_qls(parse_qls_rows(qs))) == qs);

  ClassicalLatinSquare l = validate_latin({{0, 1}, {1, 0}});
  CHECK(parse_latin_grid(serialize_latin(l)) == l.grid());

  UnitaryErrorBasis ueb = basis_M();
  std::string us = serialize_ueb(ueb);
  RawUeb raw = parse_ueb_raw(us);
  CHECK(raw.elements == ueb.elements());
  CHECK(serialize_ueb(validate_ueb(raw.elements, raw.provenance)) == us);
}

TEST_CASE("parsers reject malformed input") {
  CHECK_THROWS_AS(parse_matrix("not json"), std::invalid_argument);
  CHECK_THROWS_AS(parse_matrix(R"({"n": 2, "entries": [[[1, 0]]]})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_matrix(R"({"n": 1, "entries": [[[1, 0], [0, 1]]]})"),
                  std::invalid_argument);
  CHECK(parse_matrix(R"({"n": 1, "entries": [[[1.0, 0.0]]]})") ==
        Matrix::identity(1));
  CHECK_THROWS_AS(parse_matrix(R"({"n": 1, "entries": [[[1e999, 0]]]})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_matrix(R"({"entries": [[[1, 0]]]})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_matrix(R"({"n": -1, "entries": []})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      parse_ueb_raw(
          R"({"n": 1, "provenance": "alchemy", "elements": [{"n": 1, "entries": [[[1, 0]]]}]})"),
      std::invalid_argument);
  CHECK_THROWS_AS(parse_latin_grid(R"({"n": 2, "grid": [[0, 1], [1, 2.5]]})"),
                  std::invalid_argument);
}

TEST_CASE("checked-in fixture files match the canonical bytes") {
  const char* dir = UEBFORGE_FIXTURES_DIR;
  for (const Fixture& f : fixtures()) {
    std::string path = std::string(dir) + "/" + f.name + ".json";
    CHECK(read_file(path) == fixture_canonical_json(f.name));
  }
}

TEST_CASE("obstruction reports serialize canonically") {
  ObstructionReport r = mu_power_commutator_obstruction(basis_M());
  nlohmann::json j = nlohmann::json::parse(serialize_report(r));
  CHECK(j["verdict"] == "obstructed");
  CHECK(j["test"] == "mu_power_commutator");
  CHECK(j["witness"]["elements"] == nlohmann::json({1, 2}));
  CHECK(j["witness"]["frobenius_norm"].get<double>() ==
        doctest::Approx(2.4626300524114457));
  CHECK(j["theta"] == 1e-3);

  ObstructionReport ra = adjoint_closure_obstruction(basis_M());
  nlohmann::json ja = nlohmann::json::parse(serialize_report(ra));
  CHECK(ja["witness"]["element"] == 1);

  ObstructionReport clear =
      adjoint_closure_obstruction(nice_error_basis(pauli_rep()));
  nlohmann::json jc = nlohmann::json::parse(serialize_report(clear));
  CHECK(jc["verdict"] == "not_obstructed");
  CHECK(jc["witness"].is_null());
  std::string text = serialize_report(clear);
  CHECK(text.rfind("{\n  \"eps\"", 0) == 0);  // sorted keys, 2-space indent
  CHECK(text.back() == '\n');
}
