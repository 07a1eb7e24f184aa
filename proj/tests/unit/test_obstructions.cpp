#include <cmath>
#include <vector>

#include "doctest.h"
#include "uebforge/catalog.hpp"
#include "uebforge/obstructions.hpp"
#include "uebforge/rng.hpp"

using namespace uebforge;

TEST_CASE("monomial matrices are detected and factor as D o P") {
  Matrix m13 = basis_M().element(1, 3);
  REQUIRE(is_monomial(m13));
  auto dec = monomial_decompose(m13);
  REQUIRE(dec);
  CHECK(dec->p.image() == std::vector<std::size_t>{3, 2, 1, 0});
  CHECK(dec->d == diag({Complex(0, -1), Complex(-1, 0), Complex(0, 1),
                        Complex(1, 0)}));
  CHECK(compose(dec->d, permutation_matrix(dec->p)) == m13);

  CHECK(is_monomial(Matrix::identity(4)));
  CHECK(!is_monomial(example_hadamard().matrix()));
  CHECK(!monomial_decompose(example_hadamard().matrix()));
  CHECK(!is_monomial(Matrix(3)));  // zero matrix has empty rows
}

TEST_CASE("monomializes checks conjugation across the whole family") {
  // every element of a Hadamard-method basis is monomialized by the adjoint
  // of the matrix it was built from, up to normalization
  UnitaryErrorBasis b = hadamard_basis(h_alpha(0.42));
  Matrix y = matrix_Y();
  CHECK(monomializes(y, b.elements()));
  CHECK(!monomializes(Matrix::identity(4), basis_M().elements()));
  CHECK_THROWS_AS(
      monomializes(Complex(2.0) * Matrix::identity(4), b.elements()),
      std::invalid_argument);
}

TEST_CASE("the commutator obstruction certifies the stored basis") {
  ObstructionReport r = mu_power_commutator_obstruction(basis_M());
  CHECK(r.verdict == Verdict::obstructed);
  CHECK(r.test == "mu_power_commutator");
  REQUIRE(r.witness_pair);
  CHECK(r.witness_pair->first == 1);
  CHECK(r.witness_pair->second == 2);
  REQUIRE(r.witness_norm);
  CHECK(std::abs(*r.witness_norm - 2.4626300524114457) <= 1e-9);
  CHECK(!r.witness_element);
  CHECK(r.theta == 1e-3);
}

TEST_CASE("monomializable bases pass the commutator test") {
  ClassicalLatinSquare l = validate_latin(
      {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}});
  UnitaryErrorBasis s =
      sm(l, std::vector<HadamardMatrix>(4, fourier(4)));
  CHECK(mu_power_commutator_obstruction(s).verdict ==
        Verdict::not_obstructed);

  UnitaryErrorBasis h = hadamard_basis(h_alpha(0.42));
  ObstructionReport rh = mu_power_commutator_obstruction(h);
  CHECK(rh.verdict == Verdict::not_obstructed);
  CHECK(!rh.witness_pair);
  CHECK(!rh.witness_norm);
}

TEST_CASE("the adjoint closure obstruction certifies and clears correctly") {
  ObstructionReport r = adjoint_closure_obstruction(basis_M());
  CHECK(r.verdict == Verdict::obstructed);
  CHECK(r.test == "adjoint_closure");
  REQUIRE(r.witness_element);
  CHECK(*r.witness_element == 1);
  CHECK(!r.witness_pair);

  for (std::size_t n = 2; n <= 4; ++n)
    CHECK(adjoint_closure_obstruction(nice_error_basis(clock_shift_rep(n)))
              .verdict == Verdict::not_obstructed);
  CHECK(adjoint_closure_obstruction(nice_error_basis(pauli_rep())).verdict ==
        Verdict::not_obstructed);
}

TEST_CASE("both obstructions demand an identity-proportional member") {
  UnitaryErrorBasis pauli = nice_error_basis(pauli_rep());
  UebEquivalenceWitness w = UebEquivalenceWitness::identity(2);
  w.u = random_unitary(2, 77);
  UnitaryErrorBasis moved = apply_ueb_equivalence(pauli, w);
  bool has_identity = false;
  for (const Matrix& e : moved.elements())
    if (proportional(e, Matrix::identity(2))) has_identity = true;
  REQUIRE(!has_identity);
  CHECK_THROWS_AS(mu_power_commutator_obstruction(moved),
                  std::invalid_argument);
  CHECK_THROWS_AS(adjoint_closure_obstruction(moved), std::invalid_argument);
}

TEST_CASE("the nonzero floor must sit above the entrywise tolerance") {
  CHECK_THROWS_AS(
      mu_power_commutator_obstruction(basis_M(), {1e-12}, {1e-9}),
      std::invalid_argument);
  CHECK_THROWS_AS(adjoint_closure_obstruction(basis_M(), {1e-9}, {1e-12}),
                  std::invalid_argument);
  // a huge floor hides the witness: the verdict degrades, never errors
  CHECK(mu_power_commutator_obstruction(basis_M(), {1e9}).verdict ==
        Verdict::not_obstructed);
}

TEST_CASE("verdicts have stable names") {
  CHECK(verdict_name(Verdict::obstructed) == "obstructed");
  CHECK(verdict_name(Verdict::not_obstructed) == "not_obstructed");
}
