#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace uebforge {

using Complex = std::complex<double>;

// Thrown when a validator rejects its input. The message names the first
// violated condition and the offending index.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Absolute per-entry comparison threshold used by every validator.
struct Tolerance {
  double eps = 1e-9;
};

// Dense square complex matrix, row-major storage. Entries are checked finite
// on construction; (i, j) means row i, column j, zero-indexed.
class Matrix {
 public:
  explicit Matrix(std::size_t n);
  Matrix(std::size_t n, std::vector<Complex> entries);

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<std::vector<Complex>>& rows);

  std::size_t size() const { return n_; }

  const Complex& operator()(std::size_t i, std::size_t j) const {
    return a_[i * n_ + j];
  }
  Complex& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }

  // Bounds-checked access.
  const Complex& at(std::size_t i, std::size_t j) const;
  Complex& at(std::size_t i, std::size_t j);

  const std::vector<Complex>& entries() const { return a_; }

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t n_;
  std::vector<Complex> a_;
};

// Permutation of {0, ..., n-1} stored as an image table: operator()(k) = p[k].
class Permutation {
 public:
  explicit Permutation(std::vector<std::size_t> image);
  static Permutation identity(std::size_t n);

  std::size_t size() const { return image_.size(); }
  std::size_t operator()(std::size_t k) const { return image_.at(k); }
  const std::vector<std::size_t>& image() const { return image_; }
  Permutation inverse() const;

  bool operator==(const Permutation&) const = default;

 private:
  std::vector<std::size_t> image_;
};

Matrix compose(const Matrix& a, const Matrix& b);
Matrix adjoint(const Matrix& a);
Matrix transpose(const Matrix& a);
Matrix conjugate(const Matrix& a);

Matrix operator*(const Complex& c, const Matrix& a);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);

Complex trace(const Matrix& a);
// hs_inner(A, B) = trace(adjoint(A) o B); conjugate-linear in A.
Complex hs_inner(const Matrix& a, const Matrix& b);

double max_abs(const Matrix& a);
double max_abs_diff(const Matrix& a, const Matrix& b);
double frobenius(const Matrix& a);

// Max-entry deviation of adjoint(A) o A from the identity.
double unitarity_deviation(const Matrix& a);
bool is_unitary(const Matrix& a, Tolerance tol = {});

// A^k by repeated squaring; A^0 = I.
Matrix power(const Matrix& a, std::uint64_t k);

// Diagonal matrix whose diagonal is row i of M.
Matrix diag_row(const Matrix& m, std::size_t i);
// Diagonal matrix with the given diagonal entries.
Matrix diag(const std::vector<Complex>& d);
bool is_diagonal(const Matrix& a, double eps = 0.0);

// P = sum_k |p(k)><k|, i.e. P has a 1 at (p(k), k).
Matrix permutation_matrix(const Permutation& p);
// D' with D o P == P o D' exactly: D'_kk = d_{p(k)}. D must be diagonal.
Matrix conjugate_diag(const Matrix& d, const Permutation& p);

// Unit scalar c with A == c B entrywise within tol, when one exists.
// c is computed as hs_inner(B, A) / hs_inner(B, B) and must satisfy
// ||c| - 1| <= eps. Absence is a value, not an error.
std::optional<Complex> proportional(const Matrix& a, const Matrix& b,
                                    Tolerance tol = {});

bool is_zero_diagonal(const Matrix& a, Tolerance tol = {});

// lcm(1, ..., n).
std::uint64_t mu(std::size_t n);

// Haar-like random unitary: modified Gram-Schmidt applied to a seeded
// complex Gaussian sample (see Rng for the fixed generator algorithm).
// Deterministic for a fixed seed across platforms.
Matrix random_unitary(std::size_t n, std::uint64_t seed);

std::string format_complex(const Complex& z);

}  // namespace uebforge
