#pragma once

#include <vector>

#include "uebforge/hadamard.hpp"
#include "uebforge/matrix.hpp"

namespace uebforge {

class QuantumLatinSquare;

// rows[i] is Q_i, the matrix whose columns are the entries of grid row i.
// Checks each Q_i unitary (qls1), then column orthonormality (qls2):
// sum_j conj(Q_pij) Q_qij = delta_pq for all i, p, q. The error message
// identifies the failing condition and indices.
QuantumLatinSquare validate_qls(std::vector<Matrix> rows, Tolerance tol = {});

// Grid entry point: grid[i][j] is the vector at row i, column j.
QuantumLatinSquare validate_qls_grid(
    const std::vector<std::vector<std::vector<Complex>>>& grid,
    Tolerance tol = {});

// n x n grid of vectors in C^n in which every row and every column is an
// orthonormal basis. Stored as the row matrices Q_i; the grid entry Q_ij is
// column j of Q_i, and the coefficient Q_ijk = <k|Q_ij> is (Q_i)_kj.
class QuantumLatinSquare {
 public:
  std::size_t size() const { return rows_.size(); }
  const std::vector<Matrix>& rows() const { return rows_; }
  const Matrix& row(std::size_t i) const { return rows_.at(i); }

  std::vector<Complex> entry(std::size_t i, std::size_t j) const;
  Complex coefficient(std::size_t i, std::size_t j, std::size_t k) const;

  bool operator==(const QuantumLatinSquare&) const = default;

 private:
  explicit QuantumLatinSquare(std::vector<Matrix> rows)
      : rows_(std::move(rows)) {}
  friend QuantumLatinSquare validate_qls(std::vector<Matrix>, Tolerance);
  std::vector<Matrix> rows_;
};

// Largest residual over the two conditions; used for reporting.
double qls_deviation(const std::vector<Matrix>& rows);

class ClassicalLatinSquare;

// Every row and column must contain each value in 0..n-1 exactly once.
ClassicalLatinSquare validate_latin(std::vector<std::vector<int>> grid);

class ClassicalLatinSquare {
 public:
  std::size_t size() const { return grid_.size(); }
  const std::vector<std::vector<int>>& grid() const { return grid_; }
  int at(std::size_t i, std::size_t j) const { return grid_.at(i).at(j); }

  bool operator==(const ClassicalLatinSquare&) const = default;

 private:
  explicit ClassicalLatinSquare(std::vector<std::vector<int>> grid)
      : grid_(std::move(grid)) {}
  friend ClassicalLatinSquare validate_latin(std::vector<std::vector<int>>);
  std::vector<std::vector<int>> grid_;
};

// Embed a classical square: entry (i, j) becomes the basis vector |L_ij>,
// so each row matrix is a permutation matrix.
QuantumLatinSquare from_classical(const ClassicalLatinSquare& l);

// True when every entry vector is a basis vector up to phase: exactly one
// coefficient of modulus 1 within tol, the rest below tol. With strict set,
// the surviving coefficient must equal 1 itself (no phase allowed).
bool is_classical(const QuantumLatinSquare& q, Tolerance tol = {},
                  bool strict = false);

// Row j is (1/n) H o adjoint(diag_row(H, j)) o adjoint(H).
QuantumLatinSquare qls_from_hadamard(const HadamardMatrix& h,
                                     Tolerance tol = {});

// Equivalence move: row j of the output is c_j U o Q_phi(j) o P o D.
struct QlsEquivalenceWitness {
  Matrix u;
  Permutation phi;
  Permutation p;
  std::vector<Complex> d;
  std::vector<Complex> c;

  static QlsEquivalenceWitness identity(std::size_t n);
};

QuantumLatinSquare apply_qls_equivalence(const QuantumLatinSquare& q,
                                         const QlsEquivalenceWitness& w,
                                         Tolerance tol = {});

}  // namespace uebforge
