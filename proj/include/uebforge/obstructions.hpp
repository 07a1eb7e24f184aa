#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "uebforge/matrix.hpp"
#include "uebforge/ueb.hpp"

namespace uebforge {

// Factorization A = D o P of a monomial matrix into a diagonal part and a
// permutation part.
struct MonomialDecomposition {
  Matrix d;
  Permutation p;
};

// Frobenius-norm floor above which a commutator counts as nonzero. The
// obstruction witnesses sit orders of magnitude above numerical noise, so
// any floor between roundoff and O(1) gives the same verdicts; it must stay
// above the entrywise eps.
struct NonzeroThreshold {
  double theta = 1e-3;
};

// Exactly one entry of modulus above tol.eps in each row and each column.
bool is_monomial(const Matrix& a, Tolerance tol = {});

// Decompose a monomial matrix as D o P; absent for non-monomial input.
std::optional<MonomialDecomposition> monomial_decompose(const Matrix& a,
                                                        Tolerance tol = {});

// True iff u A adjoint(u) is monomial for every A in the family. u must be
// unitary.
bool monomializes(const Matrix& u, const std::vector<Matrix>& family,
                  Tolerance tol = {});

enum class Verdict { obstructed, not_obstructed };

std::string verdict_name(Verdict v);

// Outcome of an inequivalence test. An obstructed verdict is a certificate
// (the family cannot be equivalent to the excluded class); not_obstructed is
// inconclusive, not a proof of equivalence.
struct ObstructionReport {
  Verdict verdict;
  std::string test;  // "mu_power_commutator" or "adjoint_closure"
  std::optional<std::pair<std::size_t, std::size_t>> witness_pair;
  std::optional<double> witness_norm;
  std::optional<std::size_t> witness_element;
  double theta;
  double eps;
};

// Raises every element to the mu(n)-th power and scans all pairs for a
// commutator of Frobenius norm above theta. A hit certifies the basis is not
// equivalent to any monomial basis (so not to any shift-and-multiply basis);
// the lowest witness pair wins. The family must contain an element
// proportional to the identity, else std::invalid_argument.
ObstructionReport mu_power_commutator_obstruction(const UnitaryErrorBasis& b,
                                                  NonzeroThreshold th = {},
                                                  Tolerance tol = {});

// Scans each element for some family member proportional to its adjoint. An
// unmatched element certifies the basis is not equivalent to any nice error
// basis; the lowest unmatched index wins. Same identity precondition.
ObstructionReport adjoint_closure_obstruction(const UnitaryErrorBasis& b,
                                              Tolerance tol = {},
                                              NonzeroThreshold th = {});

}  // namespace uebforge
