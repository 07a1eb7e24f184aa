#pragma once

#include <complex>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

namespace uebforge {

// Deterministic sampling helpers for generators and property tests.
//
// Everything is derived from raw std::mt19937_64 output, whose bit stream is
// pinned by the standard. The distribution adaptors in <random> are not
// (their algorithms are implementation-defined), so uniform and Gaussian
// draws are built here by hand: a fixed seed yields the same values on every
// platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t u64() { return eng_(); }

  // Uniform in [0, 1) with 53 random mantissa bits.
  double uniform01() { return static_cast<double>(u64() >> 11) * 0x1.0p-53; }

  // Standard normal via Box-Muller; the spare variate is cached.
  double gaussian() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u1 = uniform01();
    double u2 = uniform01();
    double r = std::sqrt(-2.0 * std::log1p(-u1));
    double t = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(t);
    has_spare_ = true;
    return r * std::cos(t);
  }

  std::complex<double> gaussian_complex() {
    double re = gaussian();
    double im = gaussian();
    return {re, im};
  }

  // Unit-modulus complex number e^{2 pi i u}.
  std::complex<double> unit_complex() {
    double t = 2.0 * std::numbers::pi * uniform01();
    return {std::cos(t), std::sin(t)};
  }

  std::size_t index(std::size_t bound) {
    return static_cast<std::size_t>(u64() % bound);
  }

  // Fisher-Yates shuffle of 0..n-1.
  std::vector<std::size_t> permutation(std::size_t n) {
    std::vector<std::size_t> p(n);
    for (std::size_t k = 0; k < n; ++k) p[k] = k;
    for (std::size_t k = n; k > 1; --k) {
      std::size_t j = index(k);
      std::swap(p[k - 1], p[j]);
    }
    return p;
  }

  std::vector<std::complex<double>> unit_diag(std::size_t n) {
    std::vector<std::complex<double>> d(n);
    for (auto& x : d) x = unit_complex();
    return d;
  }

 private:
  std::mt19937_64 eng_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace uebforge
