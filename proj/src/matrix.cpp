#include "uebforge/matrix.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

#include "uebforge/rng.hpp"

namespace uebforge {

namespace {

void check_finite(const std::vector<Complex>& entries) {
  for (std::size_t k = 0; k < entries.size(); ++k) {
    if (!std::isfinite(entries[k].real()) || !std::isfinite(entries[k].imag()))
      throw std::invalid_argument("non-finite matrix entry at flat index " +
                                  std::to_string(k));
  }
}

void check_same_order(const Matrix& a, const Matrix& b, const char* op) {
  if (a.size() != b.size())
    throw std::invalid_argument(std::string(op) + ": order mismatch " +
                                std::to_string(a.size()) + " vs " +
                                std::to_string(b.size()));
}

}  // namespace

Matrix::Matrix(std::size_t n) : n_(n), a_(n * n, Complex(0.0, 0.0)) {
  if (n == 0) throw std::invalid_argument("matrix order must be positive");
}

Matrix::Matrix(std::size_t n, std::vector<Complex> entries)
    : n_(n), a_(std::move(entries)) {
  if (n == 0) throw std::invalid_argument("matrix order must be positive");
  if (a_.size() != n * n)
    throw std::invalid_argument("expected " + std::to_string(n * n) +
                                " entries, got " + std::to_string(a_.size()));
  check_finite(a_);
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Complex>>& rows) {
  std::size_t n = rows.size();
  Matrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n)
      throw std::invalid_argument("row " + std::to_string(i) + " has " +
                                  std::to_string(rows[i].size()) +
                                  " entries, expected " + std::to_string(n));
    for (std::size_t j = 0; j < n; ++j) m(i, j) = rows[i][j];
  }
  check_finite(m.a_);
  return m;
}

const Complex& Matrix::at(std::size_t i, std::size_t j) const {
  if (i >= n_ || j >= n_)
    throw std::out_of_range("matrix index (" + std::to_string(i) + ", " +
                            std::to_string(j) + ") out of range for order " +
                            std::to_string(n_));
  return a_[i * n_ + j];
}

Complex& Matrix::at(std::size_t i, std::size_t j) {
  if (i >= n_ || j >= n_)
    throw std::out_of_range("matrix index (" + std::to_string(i) + ", " +
                            std::to_string(j) + ") out of range for order " +
                            std::to_string(n_));
  return a_[i * n_ + j];
}

Permutation::Permutation(std::vector<std::size_t> image)
    : image_(std::move(image)) {
  std::size_t n = image_.size();
  if (n == 0) throw std::invalid_argument("empty permutation");
  std::vector<bool> seen(n, false);
  for (std::size_t k = 0; k < n; ++k) {
    if (image_[k] >= n || seen[image_[k]])
      throw std::invalid_argument("image table is not a bijection at index " +
                                  std::to_string(k));
    seen[image_[k]] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::size_t> image(n);
  for (std::size_t k = 0; k < n; ++k) image[k] = k;
  return Permutation(std::move(image));
}

Permutation Permutation::inverse() const {
  std::vector<std::size_t> inv(image_.size());
  for (std::size_t k = 0; k < image_.size(); ++k) inv[image_[k]] = k;
  return Permutation(std::move(inv));
}

Matrix compose(const Matrix& a, const Matrix& b) {
  check_same_order(a, b, "compose");
  std::size_t n = a.size();
  Matrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      Complex aik = a(i, k);
      if (aik == Complex(0.0, 0.0)) continue;
      for (std::size_t j = 0; j < n; ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

Matrix adjoint(const Matrix& a) {
  std::size_t n = a.size();
  Matrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = std::conj(a(j, i));
  return out;
}

Matrix transpose(const Matrix& a) {
  std::size_t n = a.size();
  Matrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = a(j, i);
  return out;
}

Matrix conjugate(const Matrix& a) {
  std::size_t n = a.size();
  Matrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = std::conj(a(i, j));
  return out;
}

Matrix operator*(const Complex& c, const Matrix& a) {
  std::size_t n = a.size();
  Matrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = c * a(i, j);
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  check_same_order(a, b, "add");
  std::size_t n = a.size();
  Matrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = a(i, j) + b(i, j);
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  check_same_order(a, b, "subtract");
  std::size_t n = a.size();
  Matrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = a(i, j) - b(i, j);
  return out;
}

Complex trace(const Matrix& a) {
  Complex t = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) t += a(i, i);
  return t;
}

Complex hs_inner(const Matrix& a, const Matrix& b) {
  check_same_order(a, b, "hs_inner");
  Complex t = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      t += std::conj(a(i, j)) * b(i, j);
  return t;
}

double max_abs(const Matrix& a) {
  double m = 0.0;
  for (const auto& z : a.entries()) m = std::max(m, std::abs(z));
  return m;
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
  check_same_order(a, b, "max_abs_diff");
  double m = 0.0;
  for (std::size_t k = 0; k < a.entries().size(); ++k)
    m = std::max(m, std::abs(a.entries()[k] - b.entries()[k]));
  return m;
}

double frobenius(const Matrix& a) {
  double s = 0.0;
  for (const auto& z : a.entries()) s += std::norm(z);
  return std::sqrt(s);
}

double unitarity_deviation(const Matrix& a) {
  return max_abs_diff(compose(adjoint(a), a), Matrix::identity(a.size()));
}

bool is_unitary(const Matrix& a, Tolerance tol) {
  return unitarity_deviation(a) <= tol.eps;
}

Matrix power(const Matrix& a, std::uint64_t k) {
  Matrix result = Matrix::identity(a.size());
  Matrix base = a;
  while (k > 0) {
    if (k & 1) result = compose(result, base);
    k >>= 1;
    if (k > 0) base = compose(base, base);
  }
  return result;
}

Matrix diag_row(const Matrix& m, std::size_t i) {
  if (i >= m.size())
    throw std::out_of_range("diag_row: row " + std::to_string(i) +
                            " out of range for order " +
                            std::to_string(m.size()));
  Matrix out(m.size());
  for (std::size_t j = 0; j < m.size(); ++j) out(j, j) = m(i, j);
  return out;
}

Matrix diag(const std::vector<Complex>& d) {
  Matrix out(d.size());
  for (std::size_t j = 0; j < d.size(); ++j) out(j, j) = d[j];
  return out;
}

bool is_diagonal(const Matrix& a, double eps) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      if (i != j && std::abs(a(i, j)) > eps) return false;
  return true;
}

Matrix permutation_matrix(const Permutation& p) {
  Matrix out(p.size());
  for (std::size_t k = 0; k < p.size(); ++k) out(p(k), k) = 1.0;
  return out;
}

Matrix conjugate_diag(const Matrix& d, const Permutation& p) {
  if (d.size() != p.size())
    throw std::invalid_argument("conjugate_diag: order mismatch");
  if (!is_diagonal(d))
    throw std::invalid_argument("conjugate_diag: input is not diagonal");
  Matrix out(d.size());
  for (std::size_t k = 0; k < d.size(); ++k) out(k, k) = d(p(k), p(k));
  return out;
}

std::optional<Complex> proportional(const Matrix& a, const Matrix& b,
                                    Tolerance tol) {
  check_same_order(a, b, "proportional");
  Complex bb = hs_inner(b, b);
  if (bb.real() <= 0.0) return std::nullopt;
  Complex c = hs_inner(b, a) / bb.real();
  if (std::abs(std::abs(c) - 1.0) > tol.eps) return std::nullopt;
  if (max_abs_diff(a, c * b) > tol.eps) return std::nullopt;
  return c;
}

bool is_zero_diagonal(const Matrix& a, Tolerance tol) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (std::abs(a(i, i)) > tol.eps) return false;
  return true;
}

std::uint64_t mu(std::size_t n) {
  if (n == 0) throw std::invalid_argument("mu requires n >= 1");
  std::uint64_t m = 1;
  for (std::uint64_t k = 2; k <= n; ++k) m = std::lcm(m, k);
  return m;
}

Matrix random_unitary(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("matrix order must be positive");
  Rng rng(seed);
  // Columns of a complex Gaussian sample...
  std::vector<std::vector<Complex>> cols(n, std::vector<Complex>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) cols[j][i] = rng.gaussian_complex();
  // ...orthonormalized by modified Gram-Schmidt.
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t j = 0; j < k; ++j) {
      Complex proj = 0.0;
      for (std::size_t i = 0; i < n; ++i)
        proj += std::conj(cols[j][i]) * cols[k][i];
      for (std::size_t i = 0; i < n; ++i) cols[k][i] -= proj * cols[j][i];
    }
    double norm = 0.0;
    for (std::size_t i = 0; i < n; ++i) norm += std::norm(cols[k][i]);
    norm = std::sqrt(norm);
    if (norm < 1e-12)
      throw std::runtime_error("degenerate Gaussian sample in random_unitary");
    for (std::size_t i = 0; i < n; ++i) cols[k][i] /= norm;
  }
  Matrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = cols[j][i];
  return out;
}

std::string format_complex(const Complex& z) {
  std::ostringstream os;
  os << z.real();
  if (z.imag() >= 0.0)
    os << "+" << z.imag() << "i";
  else
    os << "-" << -z.imag() << "i";
  return os.str();
}

}  // namespace uebforge
