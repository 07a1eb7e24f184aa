#include <cmath>
#include <vector>

#include "doctest.h"
#include "uebforge/catalog.hpp"
#include "uebforge/qls.hpp"
#include "uebforge/rng.hpp"

using namespace uebforge;

namespace {

std::vector<std::vector<int>> cyclic_grid(int n) {
  std::vector<std::vector<int>> g(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g[i][j] = (i + j) % n;
  return g;
}

// A pool of classical squares of orders 2 to 4.
std::vector<std::vector<std::vector<int>>> square_pool() {
  std::vector<std::vector<std::vector<int>>> pool;
  pool.push_back(cyclic_grid(2));
  pool.push_back({{1, 0}, {0, 1}});
  pool.push_back(cyclic_grid(3));
  pool.push_back({{0, 2, 1}, {2, 1, 0}, {1, 0, 2}});
  std::vector<std::vector<int>> twisted(3, std::vector<int>(3));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) twisted[i][j] = (2 * i + j) % 3;
  pool.push_back(twisted);
  pool.push_back(cyclic_grid(4));
  std::vector<std::vector<int>> xors(4, std::vector<int>(4));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) xors[i][j] = i ^ j;
  pool.push_back(xors);
  pool.push_back({{3, 2, 1, 0}, {2, 3, 0, 1}, {1, 0, 3, 2}, {0, 1, 2, 3}});
  pool.push_back({{0, 1, 2, 3}, {3, 0, 1, 2}, {2, 3, 0, 1}, {1, 2, 3, 0}});
  pool.push_back({{1, 3, 0, 2}, {0, 2, 1, 3}, {3, 1, 2, 0}, {2, 0, 3, 1}});
  return pool;
}

}  // namespace

TEST_CASE("the order-4 worked example is a valid square") {
  QuantumLatinSquare q = example_qls();
  CHECK(q.size() == 4);
  CHECK(qls_deviation(q.rows()) <= 1e-12);

  // entry (0, 0) is |0>, entry (1, 1) is (i|0> + 2|3>) / sqrt 5
  CHECK(q.coefficient(0, 0, 0) == Complex(1.0));
  CHECK(q.coefficient(0, 0, 2) == Complex(0.0));
  double s5 = std::sqrt(5.0);
  CHECK(std::abs(q.coefficient(1, 1, 0) - Complex(0.0, 1.0 / s5)) <= 1e-15);
  CHECK(std::abs(q.coefficient(1, 1, 3) - Complex(2.0 / s5)) <= 1e-15);
  CHECK(std::abs(q.coefficient(1, 1, 1)) <= 1e-15);
}

TEST_CASE("classical squares embed soundly and single-cell corruption fails") {
  auto pool = square_pool();
  CHECK(pool.size() >= 10);
  for (const auto& grid : pool) {
    ClassicalLatinSquare l = validate_latin(grid);
    QuantumLatinSquare q = from_classical(l);
    CHECK(qls_deviation(q.rows()) == 0.0);
    CHECK(is_classical(q));
    CHECK(is_classical(q, {}, true));

    int n = static_cast<int>(grid.size());
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        auto broken = grid;
        broken[i][j] = (broken[i][j] + 1) % n;
        CHECK_THROWS_AS(validate_latin(broken), ValidationError);
      }
  }
  CHECK_THROWS_AS(validate_latin({{0, 1}, {0, 1}}), ValidationError);
  CHECK_THROWS_AS(validate_latin({{0, 5}, {5, 0}}), ValidationError);
  CHECK_THROWS_AS(validate_latin({{0, 1}}), std::invalid_argument);
}

TEST_CASE("grid construction agrees with row-matrix construction") {
  QuantumLatinSquare q = example_qls();
  std::vector<std::vector<std::vector<Complex>>> grid(4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) grid[i].push_back(q.entry(i, j));
  CHECK(validate_qls_grid(grid) == q);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      for (std::size_t k = 0; k < 4; ++k)
        CHECK(q.coefficient(i, j, k) == q.row(i)(k, j));
}

TEST_CASE("the validator reports the failing condition") {
  Matrix half = Complex(0.5) * Matrix::identity(2);
  CHECK_THROWS_WITH_AS(validate_qls({half, half}), doctest::Contains("qls1"),
                       ValidationError);
  // each row unitary, but column 0 repeats |0>
  CHECK_THROWS_WITH_AS(
      validate_qls({Matrix::identity(2), Matrix::identity(2)}),
      doctest::Contains("qls2"), ValidationError);
  CHECK_THROWS_AS(validate_qls({Matrix::identity(2), Matrix::identity(3)}),
                  std::invalid_argument);
  CHECK_THROWS_AS(validate_qls({}), std::invalid_argument);
  CHECK_THROWS_AS(validate_qls({Matrix::identity(1), Matrix::identity(1)}),
                  std::invalid_argument);
}

TEST_CASE("rows derived from a Hadamard matrix form a valid square") {
  // order 2: rows are the identity and the bit flip
  QuantumLatinSquare q2 = qls_from_hadamard(fourier(2));
  CHECK(max_abs_diff(q2.row(0), Matrix::identity(2)) <= 1e-12);
  CHECK(max_abs_diff(q2.row(1), Matrix::from_rows({{0.0, 1.0}, {1.0, 0.0}})) <=
        1e-12);
  for (std::size_t n = 2; n <= 6; ++n)
    CHECK(qls_deviation(qls_from_hadamard(fourier(n)).rows()) <= 1e-12);
  CHECK(qls_deviation(qls_from_hadamard(h_alpha(0.3)).rows()) <= 1e-12);
}

TEST_CASE("is_classical tolerates phases unless strict") {
  QuantumLatinSquare q = from_classical(validate_latin(cyclic_grid(3)));
  auto rows = q.rows();
  rows[1] = Complex(0.0, 1.0) * rows[1];  // global phase on one row
  QuantumLatinSquare phased = validate_qls(rows);
  CHECK(is_classical(phased));
  CHECK(!is_classical(phased, {}, true));
  CHECK(!is_classical(example_qls()));
  CHECK(!is_classical(qls_from_hadamard(h_alpha(0.3))));
}

TEST_CASE("equivalence moves preserve validity") {
  QuantumLatinSquare q = example_qls();
  QuantumLatinSquare same =
      apply_qls_equivalence(q, QlsEquivalenceWitness::identity(4));
  CHECK(same == q);

  QlsEquivalenceWitness swap_cols = QlsEquivalenceWitness::identity(4);
  swap_cols.p = Permutation({3, 1, 2, 0});
  CHECK(qls_deviation(apply_qls_equivalence(q, swap_cols).rows()) <= 1e-12);

  QlsEquivalenceWitness phases = QlsEquivalenceWitness::identity(4);
  phases.c = {Complex(0, 1), Complex(0, 1), Complex(0, 1), Complex(0, 1)};
  CHECK(qls_deviation(apply_qls_equivalence(q, phases).rows()) <= 1e-12);

  Rng rng(41);
  for (int t = 0; t < 10; ++t) {
    QlsEquivalenceWitness w{random_unitary(4, rng.u64()),
                            Permutation(rng.permutation(4)),
                            Permutation(rng.permutation(4)), rng.unit_diag(4),
                            rng.unit_diag(4)};
    CHECK(qls_deviation(apply_qls_equivalence(q, w).rows()) <= 1e-11);
  }

  QlsEquivalenceWitness bad = QlsEquivalenceWitness::identity(4);
  bad.c[0] = 0.5;
  CHECK_THROWS_AS(apply_qls_equivalence(q, bad), std::invalid_argument);
  QlsEquivalenceWitness nonunitary = QlsEquivalenceWitness::identity(4);
  nonunitary.u = Matrix::from_rows({{1.0, 1.0, 0.0, 0.0},
                                    {0.0, 1.0, 0.0, 0.0},
                                    {0.0, 0.0, 1.0, 0.0},
                                    {0.0, 0.0, 0.0, 1.0}});
  CHECK_THROWS_AS(apply_qls_equivalence(q, nonunitary), std::invalid_argument);
}

TEST_CASE("columns of a valid square are orthonormal bases too") {
  auto column_deviation = [](const QuantumLatinSquare& q) {
    double worst = 0.0;
    std::size_t n = q.size();
    for (std::size_t j = 0; j < n; ++j) {
      Matrix c(n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) c(k, i) = q.coefficient(i, j, k);
      worst = std::max(worst, unitarity_deviation(c));
    }
    return worst;
  };
  CHECK(column_deviation(example_qls()) <= 1e-9);
  CHECK(column_deviation(qls_from_hadamard(h_alpha(0.3))) <= 1e-9);
  CHECK(column_deviation(from_classical(validate_latin(cyclic_grid(4)))) ==
        0.0);
}
