#include "uebforge/qls.hpp"

#include <cmath>

namespace uebforge {

QuantumLatinSquare validate_qls(std::vector<Matrix> rows, Tolerance tol) {
  std::size_t n = rows.size();
  if (n == 0) throw std::invalid_argument("empty quantum Latin square");
  for (std::size_t i = 0; i < n; ++i)
    if (rows[i].size() != n)
      throw std::invalid_argument("row matrix " + std::to_string(i) +
                                  " has order " +
                                  std::to_string(rows[i].size()) +
                                  ", expected " + std::to_string(n));
  for (std::size_t i = 0; i < n; ++i) {
    double dev = unitarity_deviation(rows[i]);
    if (dev > tol.eps)
      throw ValidationError("qls1 violated: row matrix " + std::to_string(i) +
                            " is not unitary (deviation " +
                            std::to_string(dev) + ")");
  }
  // Column orthonormality: the entries down column i, compared pairwise
  // across grid rows p and q.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p; q < n; ++q) {
        Complex s = 0.0;
        for (std::size_t j = 0; j < n; ++j)
          s += std::conj(rows[p](j, i)) * rows[q](j, i);
        Complex want = (p == q) ? Complex(1.0, 0.0) : Complex(0.0, 0.0);
        if (std::abs(s - want) > tol.eps)
          throw ValidationError("qls2 violated at column " +
                                std::to_string(i) + ", rows p=" +
                                std::to_string(p) + ", q=" +
                                std::to_string(q) + ": inner product " +
                                format_complex(s));
      }
  return QuantumLatinSquare(std::move(rows));
}

QuantumLatinSquare validate_qls_grid(
    const std::vector<std::vector<std::vector<Complex>>>& grid,
    Tolerance tol) {
  std::size_t n = grid.size();
  if (n == 0) throw std::invalid_argument("empty quantum Latin square");
  std::vector<Matrix> rows;
  rows.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (grid[i].size() != n)
      throw std::invalid_argument("grid row " + std::to_string(i) + " has " +
                                  std::to_string(grid[i].size()) +
                                  " entries, expected " + std::to_string(n));
    Matrix qi(n);
    for (std::size_t j = 0; j < n; ++j) {
      if (grid[i][j].size() != n)
        throw std::invalid_argument(
            "grid entry (" + std::to_string(i) + ", " + std::to_string(j) +
            ") has dimension " + std::to_string(grid[i][j].size()) +
            ", expected " + std::to_string(n));
      for (std::size_t k = 0; k < n; ++k) qi(k, j) = grid[i][j][k];
    }
    rows.push_back(std::move(qi));
  }
  return validate_qls(std::move(rows), tol);
}

std::vector<Complex> QuantumLatinSquare::entry(std::size_t i,
                                               std::size_t j) const {
  const Matrix& qi = rows_.at(i);
  std::vector<Complex> v(size());
  for (std::size_t k = 0; k < size(); ++k) v[k] = qi.at(k, j);
  return v;
}

Complex QuantumLatinSquare::coefficient(std::size_t i, std::size_t j,
                                        std::size_t k) const {
  return rows_.at(i).at(k, j);
}

double qls_deviation(const std::vector<Matrix>& rows) {
  std::size_t n = rows.size();
  double dev = 0.0;
  for (const auto& r : rows) dev = std::max(dev, unitarity_deviation(r));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p; q < n; ++q) {
        Complex s = 0.0;
        for (std::size_t j = 0; j < n; ++j)
          s += std::conj(rows[p](j, i)) * rows[q](j, i);
        Complex want = (p == q) ? Complex(1.0, 0.0) : Complex(0.0, 0.0);
        dev = std::max(dev, std::abs(s - want));
      }
  return dev;
}

ClassicalLatinSquare validate_latin(std::vector<std::vector<int>> grid) {
  std::size_t n = grid.size();
  if (n == 0) throw std::invalid_argument("empty Latin square");
  for (std::size_t i = 0; i < n; ++i)
    if (grid[i].size() != n)
      throw std::invalid_argument("row " + std::to_string(i) + " has " +
                                  std::to_string(grid[i].size()) +
                                  " entries, expected " + std::to_string(n));
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<bool> seen(n, false);
    for (std::size_t j = 0; j < n; ++j) {
      int v = grid[i][j];
      if (v < 0 || static_cast<std::size_t>(v) >= n || seen[v])
        throw ValidationError("row " + std::to_string(i) +
                              " does not contain each value exactly once "
                              "(offending column " +
                              std::to_string(j) + ")");
      seen[v] = true;
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<bool> seen(n, false);
    for (std::size_t i = 0; i < n; ++i) {
      int v = grid[i][j];
      if (v < 0 || static_cast<std::size_t>(v) >= n || seen[v])
        throw ValidationError("column " + std::to_string(j) +
                              " does not contain each value exactly once "
                              "(offending row " +
                              std::to_string(i) + ")");
      seen[v] = true;
    }
  }
  return ClassicalLatinSquare(std::move(grid));
}

QuantumLatinSquare from_classical(const ClassicalLatinSquare& l) {
  std::size_t n = l.size();
  std::vector<Matrix> rows;
  rows.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Matrix qi(n);
    for (std::size_t j = 0; j < n; ++j)
      qi(static_cast<std::size_t>(l.at(i, j)), j) = 1.0;
    rows.push_back(std::move(qi));
  }
  return validate_qls(std::move(rows));
}

bool is_classical(const QuantumLatinSquare& q, Tolerance tol, bool strict) {
  std::size_t n = q.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::size_t hits = 0;
      for (std::size_t k = 0; k < n; ++k) {
        Complex coef = q.coefficient(i, j, k);
        double m = std::abs(coef);
        if (m > tol.eps) {
          bool unit = strict ? std::abs(coef - Complex(1.0, 0.0)) <= tol.eps
                             : std::abs(m - 1.0) <= tol.eps;
          if (!unit) return false;
          ++hits;
        }
      }
      if (hits != 1) return false;
    }
  return true;
}

QuantumLatinSquare qls_from_hadamard(const HadamardMatrix& h, Tolerance tol) {
  std::size_t n = h.size();
  const Matrix& m = h.matrix();
  Matrix hadj = adjoint(m);
  Complex scale(1.0 / static_cast<double>(n), 0.0);
  std::vector<Matrix> rows;
  rows.reserve(n);
  for (std::size_t j = 0; j < n; ++j)
    rows.push_back(scale *
                   compose(m, compose(adjoint(diag_row(m, j)), hadj)));
  return validate_qls(std::move(rows), tol);
}

QlsEquivalenceWitness QlsEquivalenceWitness::identity(std::size_t n) {
  std::vector<Complex> ones(n, Complex(1.0, 0.0));
  return {Matrix::identity(n), Permutation::identity(n),
          Permutation::identity(n), ones, ones};
}

QuantumLatinSquare apply_qls_equivalence(const QuantumLatinSquare& q,
                                         const QlsEquivalenceWitness& w,
                                         Tolerance tol) {
  std::size_t n = q.size();
  if (w.u.size() != n || w.phi.size() != n || w.p.size() != n ||
      w.d.size() != n || w.c.size() != n)
    throw std::invalid_argument("witness order mismatch");
  if (!is_unitary(w.u, tol))
    throw std::invalid_argument("witness u is not unitary");
  for (std::size_t k = 0; k < n; ++k) {
    if (std::abs(std::abs(w.d[k]) - 1.0) > tol.eps)
      throw std::invalid_argument("witness d entry " + std::to_string(k) +
                                  " is not unit modulus");
    if (std::abs(std::abs(w.c[k]) - 1.0) > tol.eps)
      throw std::invalid_argument("witness c entry " + std::to_string(k) +
                                  " is not unit modulus");
  }
  Matrix pd = compose(permutation_matrix(w.p), diag(w.d));
  std::vector<Matrix> rows;
  rows.reserve(n);
  for (std::size_t j = 0; j < n; ++j)
    rows.push_back(w.c[j] * compose(w.u, compose(q.row(w.phi(j)), pd)));
  return validate_qls(std::move(rows), tol);
}

}  // namespace uebforge
