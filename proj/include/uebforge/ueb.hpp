#pragma once

#include <optional>
#include <string>
#include <vector>

#include "uebforge/matrix.hpp"
#include "uebforge/qls.hpp"

namespace uebforge {

// How a basis was built. Embedded listings are tagged manual.
enum class Provenance { qsm, sm, hadamard, nice, manual };

std::string provenance_name(Provenance p);
std::optional<Provenance> provenance_from_name(const std::string& s);

class UnitaryErrorBasis;

// n^2 matrices of order n, all unitary, with trace inner products
// hs_inner(E_a, E_b) = n delta_ab within tol. The error message names the
// failing element or pair with the offending value.
UnitaryErrorBasis validate_ueb(std::vector<Matrix> elements,
                               Provenance prov = Provenance::manual,
                               Tolerance tol = {});

// Basis of n^2 unitaries orthogonal under the trace inner product. Grid
// constructions store element (i, j) at flat index i*n + j; group
// constructions use the group enumeration order.
class UnitaryErrorBasis {
 public:
  std::size_t dim() const { return n_; }
  const std::vector<Matrix>& elements() const { return elements_; }
  const Matrix& element(std::size_t flat) const { return elements_.at(flat); }
  const Matrix& element(std::size_t i, std::size_t j) const {
    return elements_.at(i * n_ + j);
  }
  Provenance provenance() const { return prov_; }

  bool operator==(const UnitaryErrorBasis&) const = default;

 private:
  UnitaryErrorBasis(std::size_t n, std::vector<Matrix> elements,
                    Provenance prov)
      : n_(n), elements_(std::move(elements)), prov_(prov) {}
  friend UnitaryErrorBasis validate_ueb(std::vector<Matrix>, Provenance,
                                        Tolerance);
  std::size_t n_;
  std::vector<Matrix> elements_;
  Provenance prov_;
};

// Largest residual over unitarity and trace orthogonality; for reporting.
double ueb_deviation(const std::vector<Matrix>& elements);

// Quantum shift-and-multiply: element (i, j) is Q_j o diag_row(H_j, i).
UnitaryErrorBasis qsm(const QuantumLatinSquare& q,
                      const std::vector<HadamardMatrix>& hs,
                      Tolerance tol = {});

// Shift-and-multiply: qsm over the embedded classical square. Every element
// is monomial.
UnitaryErrorBasis sm(const ClassicalLatinSquare& l,
                     const std::vector<HadamardMatrix>& hs, Tolerance tol = {});

// Hadamard method: element (i, j) is
// (1/n) H o adjoint(diag_row(H, j)) o adjoint(H) o diag_row(transpose(H), i).
// Computed from this formula directly; the factorization through
// qls_from_hadamard is a theorem checked in tests, not the definition.
UnitaryErrorBasis hadamard_basis(const HadamardMatrix& h, Tolerance tol = {});

class Group;

// Table must be a Cayley table: table[g][h] = g*h, with an identity,
// inverses, and associativity, all checked exhaustively.
Group validate_group(std::vector<std::vector<std::size_t>> table);

class Group {
 public:
  std::size_t order() const { return table_.size(); }
  std::size_t product(std::size_t g, std::size_t h) const {
    return table_.at(g).at(h);
  }
  std::size_t identity() const { return identity_; }
  std::size_t inverse(std::size_t g) const { return inverse_.at(g); }
  const std::vector<std::vector<std::size_t>>& table() const { return table_; }

 private:
  Group(std::vector<std::vector<std::size_t>> table, std::size_t identity,
        std::vector<std::size_t> inverse)
      : table_(std::move(table)),
        identity_(identity),
        inverse_(std::move(inverse)) {}
  friend Group validate_group(std::vector<std::vector<std::size_t>>);
  std::vector<std::vector<std::size_t>> table_;
  std::size_t identity_;
  std::vector<std::size_t> inverse_;
};

// Z_a x Z_b with element (x, y) at index x*b + y.
Group direct_product_cyclic(std::size_t a, std::size_t b);

// Unitary projective representation given by explicit images: rho(identity)
// must be I and rho(g) rho(h) must be proportional to rho(gh) with a
// unit-modulus scalar (the cocycle, recomputed on demand, never stored).
struct ProjectiveRepresentation {
  Group group;
  std::vector<Matrix> images;
};

// Checks the invariants above; throws ValidationError on failure.
ProjectiveRepresentation validate_projective_rep(Group group,
                                                 std::vector<Matrix> images,
                                                 Tolerance tol = {});

// Z_n x Z_n represented by rho(a, b) = shift^a o clock^b, where shift is the
// cyclic permutation |k> -> |k+1> and clock = diag(1, w, ..., w^{n-1}) with
// w = exp(2 pi i / n).
ProjectiveRepresentation clock_shift_rep(std::size_t n);

// Z_2 x Z_2 with images I, X, Y, Z.
ProjectiveRepresentation pauli_rep();

// True iff adjoint(rho(g)) is proportional to rho(g^{-1}) for every g.
bool rho_adjoint_identity_check(const ProjectiveRepresentation& rep,
                                Tolerance tol = {});

// Nice error basis: the images of a projective representation of a group of
// order n^2 whose non-identity images are traceless.
UnitaryErrorBasis nice_error_basis(const ProjectiveRepresentation& rep,
                                   Tolerance tol = {});

// Equivalence move: output element k is c_k U o A_pairing(k) o V.
struct UebEquivalenceWitness {
  Matrix u;
  Matrix v;
  std::vector<Complex> c;
  std::vector<std::size_t> pairing;

  static UebEquivalenceWitness identity(std::size_t n);
};

UnitaryErrorBasis apply_ueb_equivalence(const UnitaryErrorBasis& b,
                                        const UebEquivalenceWitness& w,
                                        Tolerance tol = {});

}  // namespace uebforge
