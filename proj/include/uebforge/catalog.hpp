#pragma once

#include <string>
#include <vector>

#include "uebforge/hadamard.hpp"
#include "uebforge/matrix.hpp"
#include "uebforge/qls.hpp"
#include "uebforge/ueb.hpp"

namespace uebforge {

// Embedded reference objects. Each constructor returns the explicitly listed
// object (validated on construction), independent of the operations that
// reproduce it; the reproduction checks compare against these.

// Order-4 quantum Latin square whose middle rows mix basis vectors with
// coefficients 1/sqrt(2) and 1/sqrt(5).
QuantumLatinSquare example_qls();

// The order-4 Fourier matrix, written out entrywise.
HadamardMatrix example_hadamard();

// 16-element unitary error basis produced by qsm(example_qls, 4 copies of
// example_hadamard), stored as the explicit listing (provenance manual).
UnitaryErrorBasis basis_M();

// Fixed unitary that conjugates every hadamard_basis(h_alpha(alpha)) element
// to monomial form.
Matrix matrix_Y();

// Monomial images Y o element o adjoint(Y) of hadamard_basis(h_alpha(alpha)),
// stored as the explicit listing with parameter alpha.
UnitaryErrorBasis basis_F_prime(double alpha);

struct Fixture {
  std::string name;
  std::string kind;  // "matrix", "hadamard", "qls" or "ueb"
  std::string source;
};

// Names, kinds and origin notes of the fixtures exported under fixtures/.
const std::vector<Fixture>& fixtures();

// Canonical JSON bytes for the named fixture; matches the checked-in file.
std::string fixture_canonical_json(const std::string& name);

}  // namespace uebforge
