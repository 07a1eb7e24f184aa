#include <cmath>
#include <vector>

#include "doctest.h"
#include "uebforge/catalog.hpp"
#include "uebforge/obstructions.hpp"
#include "uebforge/rng.hpp"
#include "uebforge/ueb.hpp"

using namespace uebforge;

namespace {

std::vector<HadamardMatrix> copies(const HadamardMatrix& h, std::size_t n) {
  return std::vector<HadamardMatrix>(n, h);
}

}  // namespace

TEST_CASE("the stored 16-element basis satisfies the axioms") {
  UnitaryErrorBasis m = basis_M();
  CHECK(m.dim() == 4);
  CHECK(m.elements().size() == 16);
  CHECK(m.provenance() == Provenance::manual);
  CHECK(ueb_deviation(m.elements()) <= 1e-12);
  CHECK(m.element(0, 0) == Matrix::identity(4));
  for (const Matrix& e : m.elements()) CHECK(is_unitary(e));
}

TEST_CASE("quantum shift-and-multiply reproduces the stored listing") {
  UnitaryErrorBasis built =
      qsm(example_qls(), copies(example_hadamard(), 4));
  UnitaryErrorBasis stored = basis_M();
  CHECK(built.provenance() == Provenance::qsm);
  REQUIRE(built.elements().size() == 16);
  for (std::size_t k = 0; k < 16; ++k)
    CHECK(max_abs_diff(built.element(k), stored.element(k)) == 0.0);
  // element (0, j) is row j of the square itself
  for (std::size_t j = 0; j < 4; ++j)
    CHECK(built.element(0, j) == example_qls().row(j));
}

TEST_CASE("shift-and-multiply output is monomial and contained in qsm") {
  ClassicalLatinSquare l = validate_latin(
      {{0, 1, 2, 3}, {1, 2, 3, 0}, {2, 3, 0, 1}, {3, 0, 1, 2}});
  auto hs = copies(fourier(4), 4);
  UnitaryErrorBasis b = sm(l, hs);
  CHECK(b.provenance() == Provenance::sm);
  CHECK(ueb_deviation(b.elements()) <= 1e-12);
  for (const Matrix& e : b.elements()) CHECK(is_monomial(e));

  UnitaryErrorBasis via_qsm = qsm(from_classical(l), hs);
  for (std::size_t k = 0; k < 16; ++k)
    CHECK(max_abs_diff(b.element(k), via_qsm.element(k)) == 0.0);
}

TEST_CASE("the Hadamard method gives a basis with identity at slot (0,0)") {
  for (double alpha : {0.0, 0.7, 1.3}) {
    UnitaryErrorBasis b = hadamard_basis(h_alpha(alpha));
    CHECK(b.provenance() == Provenance::hadamard);
    CHECK(ueb_deviation(b.elements()) <= 1e-11);
    CHECK(max_abs_diff(b.element(0, 0), Matrix::identity(4)) <= 1e-12);
  }
  // factorization through the derived square, with transposed-copy family
  for (const HadamardMatrix& h : {fourier(4), h_alpha(0.3)}) {
    UnitaryErrorBasis direct = hadamard_basis(h);
    HadamardMatrix ht = validate_hadamard(transpose(h.matrix()));
    UnitaryErrorBasis factored = qsm(qls_from_hadamard(h), copies(ht, 4));
    for (std::size_t k = 0; k < 16; ++k)
      CHECK(max_abs_diff(direct.element(k), factored.element(k)) <= 1e-12);
  }
}

TEST_CASE("qsm accepts mixed Hadamard families") {
  QuantumLatinSquare q = qls_from_hadamard(fourier(4));
  std::vector<HadamardMatrix> hs = {fourier(4), h_alpha(0.3), h_alpha(1.1),
                                    fourier(4)};
  CHECK(ueb_deviation(qsm(q, hs).elements()) <= 1e-11);

  // a square moved by an equivalence still works with any family
  Rng rng(53);
  QlsEquivalenceWitness w{random_unitary(4, rng.u64()),
                          Permutation(rng.permutation(4)),
                          Permutation(rng.permutation(4)), rng.unit_diag(4),
                          rng.unit_diag(4)};
  QuantumLatinSquare moved = apply_qls_equivalence(example_qls(), w);
  CHECK(ueb_deviation(qsm(moved, hs).elements()) <= 1e-10);

  CHECK_THROWS_AS(qsm(q, copies(fourier(4), 3)), std::invalid_argument);
  CHECK_THROWS_AS(qsm(q, copies(fourier(3), 4)), std::invalid_argument);
}

TEST_CASE("the validator rejects near misses") {
  auto elements = basis_M().elements();
  elements[5](0, 0) += 1e-3;
  CHECK_THROWS_AS(validate_ueb(std::move(elements)), ValidationError);

  // right count, all unitary, not orthogonal
  std::vector<Matrix> dup(4, Matrix::identity(2));
  CHECK_THROWS_AS(validate_ueb(std::move(dup)), ValidationError);

  std::vector<Matrix> three(3, Matrix::identity(2));
  CHECK_THROWS_AS(validate_ueb(std::move(three)), std::invalid_argument);
}

TEST_CASE("group validation checks the table exhaustively") {
  Group z6 = direct_product_cyclic(2, 3);
  CHECK(z6.order() == 6);
  CHECK(z6.identity() == 0);
  for (std::size_t g = 0; g < 6; ++g) {
    CHECK(z6.product(g, z6.inverse(g)) == z6.identity());
    CHECK(z6.product(z6.inverse(g), g) == z6.identity());
  }
  // (1,1) * (1,2) = (0, 0): indices 1*3+1=4, 1*3+2=5
  CHECK(z6.product(4, 5) == 0);

  CHECK_THROWS_WITH_AS(validate_group({{0, 0}, {1, 1}}),
                       doctest::Contains("identity"), ValidationError);
  // identity and inverses fine, associativity broken at (1, 2, 2)
  CHECK_THROWS_WITH_AS(validate_group({{0, 1, 2}, {1, 2, 0}, {2, 0, 2}}),
                       doctest::Contains("associat"), ValidationError);
  CHECK_THROWS_AS(validate_group({{0, 7}, {1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(validate_group({{0, 1}, {1}}), std::invalid_argument);
}

TEST_CASE("projective representations validate and satisfy the adjoint identity") {
  for (std::size_t n = 2; n <= 4; ++n) {
    ProjectiveRepresentation rep = clock_shift_rep(n);
    CHECK(rep.group.order() == n * n);
    CHECK(rep.images[rep.group.identity()] == Matrix::identity(n));
    for (const Matrix& im : rep.images) CHECK(is_unitary(im));
    CHECK(rho_adjoint_identity_check(rep));
    for (std::size_t g = 0; g < rep.images.size(); ++g)
      if (g != rep.group.identity())
        CHECK(std::abs(trace(rep.images[g])) <= 1e-12);
  }

  ProjectiveRepresentation p = pauli_rep();
  Matrix x = Matrix::from_rows({{0.0, 1.0}, {1.0, 0.0}});
  Matrix y = Matrix::from_rows({{0.0, Complex(0, -1)}, {Complex(0, 1), 0.0}});
  Matrix z = Matrix::from_rows({{1.0, 0.0}, {0.0, -1.0}});
  CHECK(p.images[0] == Matrix::identity(2));
  CHECK(p.images[1] == z);
  CHECK(p.images[2] == x);
  CHECK(p.images[3] == y);
  CHECK(rho_adjoint_identity_check(p));

  // rho(g) rho(h) must stay proportional to rho(gh)
  std::vector<Matrix> broken = p.images;
  broken[3] = Matrix::from_rows({{0.0, 1.0}, {Complex(0, 1), 0.0}});
  CHECK_THROWS_AS(validate_projective_rep(p.group, std::move(broken)),
                  ValidationError);
}

TEST_CASE("nice bases are unitary error bases") {
  for (std::size_t n = 2; n <= 4; ++n) {
    UnitaryErrorBasis b = nice_error_basis(clock_shift_rep(n));
    CHECK(b.dim() == n);
    CHECK(b.provenance() == Provenance::nice);
    CHECK(ueb_deviation(b.elements()) <= 1e-12);
  }
  CHECK(ueb_deviation(nice_error_basis(pauli_rep()).elements()) <= 1e-12);

  // group order must be the square of the matrix order
  ProjectiveRepresentation z2{direct_product_cyclic(2, 1),
                              {Matrix::identity(2),
                               Matrix::from_rows({{1.0, 0.0}, {0.0, -1.0}})}};
  CHECK_THROWS_AS(nice_error_basis(z2), std::invalid_argument);

  // all-identity images form a projective rep but fail tracelessness
  ProjectiveRepresentation flat{direct_product_cyclic(2, 2),
                                std::vector<Matrix>(4, Matrix::identity(2))};
  CHECK_THROWS_AS(nice_error_basis(flat), ValidationError);
}

TEST_CASE("basis equivalence moves preserve the axioms") {
  UnitaryErrorBasis m = basis_M();
  UnitaryErrorBasis same =
      apply_ueb_equivalence(m, UebEquivalenceWitness::identity(4));
  CHECK(same.elements() == m.elements());
  CHECK(same.provenance() == m.provenance());

  Rng rng(59);
  std::vector<Complex> c;
  for (int k = 0; k < 16; ++k) c.push_back(rng.unit_complex());
  UebEquivalenceWitness w{random_unitary(4, 7), random_unitary(4, 8), c,
                          rng.permutation(16)};
  CHECK(ueb_deviation(apply_ueb_equivalence(m, w).elements()) <= 1e-10);

  UebEquivalenceWitness bad = UebEquivalenceWitness::identity(4);
  bad.pairing[3] = 4;  // repeated index
  CHECK_THROWS_AS(apply_ueb_equivalence(m, bad), std::invalid_argument);
  UebEquivalenceWitness scaled = UebEquivalenceWitness::identity(4);
  scaled.c[0] = 2.0;
  CHECK_THROWS_AS(apply_ueb_equivalence(m, scaled), std::invalid_argument);
}
