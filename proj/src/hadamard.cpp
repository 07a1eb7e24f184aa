#include "uebforge/hadamard.hpp"

#include <cmath>
#include <numbers>

namespace uebforge {

namespace {

void check_unit_diag(const std::vector<Complex>& d, std::size_t n,
                     const char* name, double eps) {
  if (d.size() != n)
    throw std::invalid_argument(std::string(name) + " has " +
                                std::to_string(d.size()) +
                                " entries, expected " + std::to_string(n));
  for (std::size_t k = 0; k < n; ++k)
    if (std::abs(std::abs(d[k]) - 1.0) > eps)
      throw std::invalid_argument(std::string(name) + " entry " +
                                  std::to_string(k) + " has modulus " +
                                  std::to_string(std::abs(d[k])) +
                                  ", expected 1");
}

}  // namespace

HadamardMatrix validate_hadamard(const Matrix& m, Tolerance tol) {
  std::size_t n = m.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      double dev = std::abs(std::abs(m(i, j)) - 1.0);
      if (dev > tol.eps)
        throw ValidationError("had1 violated at (" + std::to_string(i) + ", " +
                              std::to_string(j) + "): |entry| = " +
                              std::to_string(std::abs(m(i, j))));
    }
  Matrix scaled_id = Complex(static_cast<double>(n), 0.0) * Matrix::identity(n);
  Matrix left = compose(m, adjoint(m));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (std::abs(left(i, j) - scaled_id(i, j)) > tol.eps)
        throw ValidationError(
            "had2 violated at (" + std::to_string(i) + ", " +
            std::to_string(j) + "): (H adjoint(H))_ij = " +
            format_complex(left(i, j)));
  Matrix right = compose(adjoint(m), m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (std::abs(right(i, j) - scaled_id(i, j)) > tol.eps)
        throw ValidationError(
            "had3 violated at (" + std::to_string(i) + ", " +
            std::to_string(j) + "): (adjoint(H) H)_ij = " +
            format_complex(right(i, j)));
  return HadamardMatrix(m);
}

double hadamard_deviation(const Matrix& m) {
  std::size_t n = m.size();
  double dev = 0.0;
  for (const auto& z : m.entries())
    dev = std::max(dev, std::abs(std::abs(z) - 1.0));
  Matrix scaled_id = Complex(static_cast<double>(n), 0.0) * Matrix::identity(n);
  dev = std::max(dev, max_abs_diff(compose(m, adjoint(m)), scaled_id));
  dev = std::max(dev, max_abs_diff(compose(adjoint(m), m), scaled_id));
  return dev;
}

HadamardMatrix fourier(std::size_t n) {
  if (n == 0) throw std::invalid_argument("fourier requires n >= 1");
  Matrix m(n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      double t = 2.0 * std::numbers::pi *
                 static_cast<double>(j * k % n) / static_cast<double>(n);
      m(j, k) = Complex(std::cos(t), std::sin(t));
    }
  return validate_hadamard(m);
}

HadamardMatrix h_alpha(double alpha) {
  Complex e(std::cos(alpha), std::sin(alpha));
  Matrix m = Matrix::from_rows({{1, 1, 1, 1},
                                {1, 1, -1, -1},
                                {1, -1, e, -e},
                                {1, -1, -e, e}});
  return validate_hadamard(m);
}

HadamardEquivalenceWitness HadamardEquivalenceWitness::identity(
    std::size_t n) {
  std::vector<Complex> ones(n, Complex(1.0, 0.0));
  return {ones, Permutation::identity(n), Permutation::identity(n), ones};
}

HadamardMatrix apply_hadamard_equivalence(const HadamardMatrix& h,
                                          const HadamardEquivalenceWitness& w,
                                          Tolerance tol) {
  std::size_t n = h.size();
  if (w.p1.size() != n || w.p2.size() != n)
    throw std::invalid_argument("witness permutation order mismatch");
  check_unit_diag(w.d1, n, "d1", tol.eps);
  check_unit_diag(w.d2, n, "d2", tol.eps);
  Matrix out = compose(
      diag(w.d1),
      compose(permutation_matrix(w.p1),
              compose(h.matrix(),
                      compose(permutation_matrix(w.p2), diag(w.d2)))));
  return validate_hadamard(out, tol);
}

}  // namespace uebforge
