#include "uebforge/obstructions.hpp"

#include <cmath>

namespace uebforge {

namespace {

void require_identity_member(const UnitaryErrorBasis& b, Tolerance tol,
                             const char* test) {
  Matrix id = Matrix::identity(b.dim());
  for (const auto& e : b.elements())
    if (proportional(e, id, tol)) return;
  throw std::invalid_argument(std::string(test) +
                              ": family contains no element proportional to "
                              "the identity");
}

}  // namespace

bool is_monomial(const Matrix& a, Tolerance tol) {
  std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t hits = 0;
    for (std::size_t j = 0; j < n; ++j)
      if (std::abs(a(i, j)) > tol.eps) ++hits;
    if (hits != 1) return false;
  }
  for (std::size_t j = 0; j < n; ++j) {
    std::size_t hits = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (std::abs(a(i, j)) > tol.eps) ++hits;
    if (hits != 1) return false;
  }
  return true;
}

std::optional<MonomialDecomposition> monomial_decompose(const Matrix& a,
                                                        Tolerance tol) {
  if (!is_monomial(a, tol)) return std::nullopt;
  std::size_t n = a.size();
  // Row i carries its nonzero in column col[i]; A = D o P then forces
  // D_ii = A_{i, col[i]} and P to map col[i] back to i.
  std::vector<std::size_t> col(n);
  Matrix d(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (std::abs(a(i, j)) > tol.eps) {
        col[i] = j;
        d(i, i) = a(i, j);
      }
  std::vector<std::size_t> image(n);
  for (std::size_t i = 0; i < n; ++i) image[col[i]] = i;
  return MonomialDecomposition{std::move(d), Permutation(std::move(image))};
}

bool monomializes(const Matrix& u, const std::vector<Matrix>& family,
                  Tolerance tol) {
  if (!is_unitary(u, tol))
    throw std::invalid_argument("monomializes: u is not unitary");
  Matrix uadj = adjoint(u);
  for (const auto& a : family) {
    if (a.size() != u.size())
      throw std::invalid_argument("monomializes: order mismatch");
    if (!is_monomial(compose(u, compose(a, uadj)), tol)) return false;
  }
  return true;
}

std::string verdict_name(Verdict v) {
  return v == Verdict::obstructed ? "obstructed" : "not_obstructed";
}

ObstructionReport mu_power_commutator_obstruction(const UnitaryErrorBasis& b,
                                                  NonzeroThreshold th,
                                                  Tolerance tol) {
  if (th.theta <= tol.eps)
    throw std::invalid_argument("threshold must exceed the entrywise eps");
  require_identity_member(b, tol, "mu_power_commutator");
  std::uint64_t exponent = mu(b.dim());
  std::vector<Matrix> powers;
  powers.reserve(b.elements().size());
  for (const auto& e : b.elements()) powers.push_back(power(e, exponent));
  for (std::size_t a = 0; a < powers.size(); ++a)
    for (std::size_t c = a + 1; c < powers.size(); ++c) {
      double norm = frobenius(compose(powers[a], powers[c]) -
                              compose(powers[c], powers[a]));
      if (norm > th.theta)
        return {Verdict::obstructed, "mu_power_commutator",
                std::make_pair(a, c), norm, std::nullopt, th.theta, tol.eps};
    }
  return {Verdict::not_obstructed, "mu_power_commutator", std::nullopt,
          std::nullopt, std::nullopt, th.theta, tol.eps};
}

ObstructionReport adjoint_closure_obstruction(const UnitaryErrorBasis& b,
                                              Tolerance tol,
                                              NonzeroThreshold th) {
  if (th.theta <= tol.eps)
    throw std::invalid_argument("threshold must exceed the entrywise eps");
  require_identity_member(b, tol, "adjoint_closure");
  for (std::size_t a = 0; a < b.elements().size(); ++a) {
    Matrix target = adjoint(b.element(a));
    bool matched = false;
    for (const auto& e : b.elements())
      if (proportional(e, target, tol)) {
        matched = true;
        break;
      }
    if (!matched)
      return {Verdict::obstructed, "adjoint_closure", std::nullopt,
              std::nullopt, a, th.theta, tol.eps};
  }
  return {Verdict::not_obstructed, "adjoint_closure", std::nullopt,
          std::nullopt, std::nullopt, th.theta, tol.eps};
}

}  // namespace uebforge
