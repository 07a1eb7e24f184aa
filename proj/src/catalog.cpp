#include "uebforge/catalog.hpp"

#include <cmath>

#include "uebforge/json_io.hpp"

namespace uebforge {

namespace {

const Complex kI(0.0, 1.0);

double s2() { return 1.0 / std::sqrt(2.0); }
double s5() { return 1.0 / std::sqrt(5.0); }

}  // namespace

QuantumLatinSquare example_qls() {
  double a = s2();
  double b = s5();
  auto basis = [&](std::size_t k) {
    std::vector<Complex> v(4, 0.0);
    v[k] = 1.0;
    return v;
  };
  std::vector<std::vector<std::vector<Complex>>> grid(4);
  grid[0] = {basis(0), basis(1), basis(2), basis(3)};
  grid[1] = {{0.0, a, -a, 0.0},
             {kI * b, 0.0, 0.0, 2.0 * b},
             {2.0 * b, 0.0, 0.0, kI * b},
             {0.0, a, a, 0.0}};
  grid[2] = {{0.0, a, a, 0.0},
             {2.0 * b, 0.0, 0.0, kI * b},
             {kI * b, 0.0, 0.0, 2.0 * b},
             {0.0, a, -a, 0.0}};
  grid[3] = {basis(3), basis(2), basis(1), basis(0)};
  return validate_qls_grid(grid);
}

HadamardMatrix example_hadamard() {
  Matrix m = Matrix::from_rows({{1, 1, 1, 1},
                                {1, kI, -1, -kI},
                                {1, -1, 1, -1},
                                {1, -kI, -1, kI}});
  return validate_hadamard(m);
}

UnitaryErrorBasis basis_M() {
  double a = s2();
  double b = s5();
  Complex ia = kI * a;
  Complex ib = kI * b;
  std::vector<Matrix> e;
  e.reserve(16);
  e.push_back(Matrix::identity(4));
  e.push_back(Matrix::from_rows({{0, ib, 2 * b, 0},
                                 {a, 0, 0, a},
                                 {-a, 0, 0, a},
                                 {0, 2 * b, ib, 0}}));
  e.push_back(Matrix::from_rows({{0, 2 * b, ib, 0},
                                 {a, 0, 0, a},
                                 {a, 0, 0, -a},
                                 {0, ib, 2 * b, 0}}));
  e.push_back(Matrix::from_rows(
      {{0, 0, 0, 1}, {0, 0, 1, 0}, {0, 1, 0, 0}, {1, 0, 0, 0}}));
  e.push_back(diag({1, kI, -1, -kI}));
  e.push_back(Matrix::from_rows({{0, -b, -2 * b, 0},
                                 {a, 0, 0, -ia},
                                 {-a, 0, 0, -ia},
                                 {0, 2.0 * ib, -ib, 0}}));
  e.push_back(Matrix::from_rows({{0, 2.0 * ib, -ib, 0},
                                 {a, 0, 0, -ia},
                                 {a, 0, 0, ia},
                                 {0, -b, -2 * b, 0}}));
  e.push_back(Matrix::from_rows(
      {{0, 0, 0, -kI}, {0, 0, -1, 0}, {0, kI, 0, 0}, {1, 0, 0, 0}}));
  e.push_back(diag({1, -1, 1, -1}));
  e.push_back(Matrix::from_rows({{0, -ib, 2 * b, 0},
                                 {a, 0, 0, -a},
                                 {-a, 0, 0, -a},
                                 {0, -2 * b, ib, 0}}));
  e.push_back(Matrix::from_rows({{0, -2 * b, ib, 0},
                                 {a, 0, 0, -a},
                                 {a, 0, 0, a},
                                 {0, -ib, 2 * b, 0}}));
  e.push_back(Matrix::from_rows(
      {{0, 0, 0, -1}, {0, 0, 1, 0}, {0, -1, 0, 0}, {1, 0, 0, 0}}));
  e.push_back(diag({1, -kI, -1, kI}));
  e.push_back(Matrix::from_rows({{0, b, -2 * b, 0},
                                 {a, 0, 0, ia},
                                 {-a, 0, 0, ia},
                                 {0, -2.0 * ib, -ib, 0}}));
  e.push_back(Matrix::from_rows({{0, -2.0 * ib, -ib, 0},
                                 {a, 0, 0, ia},
                                 {a, 0, 0, -ia},
                                 {0, b, -2 * b, 0}}));
  e.push_back(Matrix::from_rows(
      {{0, 0, 0, kI}, {0, 0, -1, 0}, {0, -kI, 0, 0}, {1, 0, 0, 0}}));
  return validate_ueb(std::move(e), Provenance::manual);
}

Matrix matrix_Y() {
  double a = s2();
  return Matrix::from_rows({{0, 0, -a, a},
                            {-a, a, 0, 0},
                            {0, 0, a, a},
                            {a, a, 0, 0}});
}

UnitaryErrorBasis basis_F_prime(double alpha) {
  Complex ep(std::cos(alpha), std::sin(alpha));      // e^{i alpha}
  Complex em = std::conj(ep);                        // e^{-i alpha}
  Complex em2 = em * em;                             // e^{-2 i alpha}
  std::vector<Matrix> e;
  e.reserve(16);
  e.push_back(Matrix::identity(4));
  e.push_back(diag({-1, -1, 1, 1}));
  e.push_back(Matrix::from_rows(
      {{0, 1, 0, 0}, {em2, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}}));
  e.push_back(Matrix::from_rows(
      {{0, -1, 0, 0}, {-em2, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}}));
  e.push_back(diag({-1, 1, -1, 1}));
  e.push_back(diag({1, -1, -1, 1}));
  e.push_back(Matrix::from_rows(
      {{0, 1, 0, 0}, {-em2, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, -1, 0}}));
  e.push_back(Matrix::from_rows(
      {{0, -1, 0, 0}, {em2, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, -1, 0}}));
  e.push_back(Matrix::from_rows(
      {{0, 0, -ep, 0}, {0, 0, 0, -1}, {-ep, 0, 0, 0}, {0, -1, 0, 0}}));
  e.push_back(Matrix::from_rows(
      {{0, 0, ep, 0}, {0, 0, 0, 1}, {-ep, 0, 0, 0}, {0, -1, 0, 0}}));
  e.push_back(Matrix::from_rows(
      {{0, 0, 0, -1}, {0, 0, -em, 0}, {0, -1, 0, 0}, {-ep, 0, 0, 0}}));
  e.push_back(Matrix::from_rows(
      {{0, 0, 0, 1}, {0, 0, em, 0}, {0, -1, 0, 0}, {-ep, 0, 0, 0}}));
  e.push_back(Matrix::from_rows(
      {{0, 0, ep, 0}, {0, 0, 0, -1}, {ep, 0, 0, 0}, {0, -1, 0, 0}}));
  e.push_back(Matrix::from_rows(
      {{0, 0, -ep, 0}, {0, 0, 0, 1}, {ep, 0, 0, 0}, {0, -1, 0, 0}}));
  e.push_back(Matrix::from_rows(
      {{0, 0, 0, -1}, {0, 0, em, 0}, {0, -1, 0, 0}, {ep, 0, 0, 0}}));
  e.push_back(Matrix::from_rows(
      {{0, 0, 0, 1}, {0, 0, -em, 0}, {0, -1, 0, 0}, {ep, 0, 0, 0}}));
  return validate_ueb(std::move(e), Provenance::manual);
}

const std::vector<Fixture>& fixtures() {
  static const std::vector<Fixture> table = {
      {"example_qls", "qls",
       "worked order-4 square with superposed entries"},
      {"mhad", "hadamard",
       "order-4 Fourier matrix, the Hadamard family behind basis_M"},
      {"basis_M", "ueb",
       "qsm(example_qls, 4 x mhad), stored as the explicit listing"},
      {"matrix_Y", "matrix",
       "fixed unitary that monomializes every hadamard_basis(h_alpha(a))"},
      {"basis_F_prime_0", "ueb",
       "basis_F_prime(0): Y-conjugated form of hadamard_basis(h_alpha(0))"},
  };
  return table;
}

std::string fixture_canonical_json(const std::string& name) {
  if (name == "example_qls") return serialize_qls(example_qls());
  if (name == "mhad") return serialize_matrix(example_hadamard().matrix());
  if (name == "basis_M") return serialize_ueb(basis_M());
  if (name == "matrix_Y") return serialize_matrix(matrix_Y());
  if (name == "basis_F_prime_0") return serialize_ueb(basis_F_prime(0.0));
  throw std::invalid_argument("unknown fixture: " + name);
}

}  // namespace uebforge
