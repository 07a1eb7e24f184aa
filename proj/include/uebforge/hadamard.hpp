#pragma once

#include <vector>

#include "uebforge/matrix.hpp"

namespace uebforge {

class HadamardMatrix;

// Checks, in order: every entry unimodular (had1), H o adjoint(H) = n I
// (had2), adjoint(H) o H = n I (had3). Throws ValidationError naming the
// first violated condition and the offending index.
HadamardMatrix validate_hadamard(const Matrix& m, Tolerance tol = {});

// Complex Hadamard matrix in the unnormalized convention: unimodular entries
// with H o adjoint(H) = n I. Never rescaled.
class HadamardMatrix {
 public:
  const Matrix& matrix() const { return m_; }
  std::size_t size() const { return m_.size(); }

  bool operator==(const HadamardMatrix&) const = default;

 private:
  explicit HadamardMatrix(Matrix m) : m_(std::move(m)) {}
  friend HadamardMatrix validate_hadamard(const Matrix&, Tolerance);
  Matrix m_;
};

// Largest residual over the three conditions; 0 for an exact Hadamard.
double hadamard_deviation(const Matrix& m);

// F_jk = exp(2 pi i j k / n).
HadamardMatrix fourier(std::size_t n);

// The one-parameter order-4 family
//   [[1, 1,  1,    1  ],
//    [1, 1, -1,   -1  ],
//    [1,-1,  e,   -e  ],
//    [1,-1, -e,    e  ]]   with e = exp(i alpha).
// Every order-4 complex Hadamard is equivalent to a member with alpha in
// [0, pi/2]; any real alpha is accepted here.
HadamardMatrix h_alpha(double alpha);

// Equivalence move H' = D1 o P1 o H o P2 o D2 with unit-modulus diagonals.
struct HadamardEquivalenceWitness {
  std::vector<Complex> d1;
  Permutation p1;
  Permutation p2;
  std::vector<Complex> d2;

  static HadamardEquivalenceWitness identity(std::size_t n);
};

HadamardMatrix apply_hadamard_equivalence(const HadamardMatrix& h,
                                          const HadamardEquivalenceWitness& w,
                                          Tolerance tol = {});

}  // namespace uebforge
