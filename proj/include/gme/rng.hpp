#ifndef GME_RNG_HPP
#define GME_RNG_HPP

#include <cmath>
#include <cstdint>
#include <vector>

#include "gme/matrix_ops.hpp"

namespace gme {

// Deterministic splitmix64 stream: output k is a fixed mix of
// seed + (k+1)*gamma, so one 64-bit seed reproduces every ensemble.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1), 53 bits.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform in {0, ..., n-1}.
  int uniform_int(int n) {
    const int v = static_cast<int>(uniform() * static_cast<double>(n));
    return v < n ? v : n - 1;
  }

  // Standard normal via Box-Muller.
  double gaussian() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    constexpr double two_pi = 6.283185307179586476925287;
    const double r = std::sqrt(-2.0 * std::log1p(-uniform()));
    const double phi = two_pi * uniform();
    spare_ = r * std::sin(phi);
    has_spare_ = true;
    return r * std::cos(phi);
  }

  // Standard complex Gaussian: independent N(0,1) real and imaginary parts.
  Complex complex_gaussian() {
    const double re = gaussian();
    const double im = gaussian();
    return {re, im};
  }

  // Flat Dirichlet weights: k unit exponentials, normalized.
  std::vector<double> dirichlet(int k) {
    std::vector<double> w(static_cast<size_t>(k));
    double sum = 0.0;
    for (double& v : w) {
      v = -std::log1p(-uniform());
      sum += v;
    }
    for (double& v : w) v /= sum;
    return w;
  }

 private:
  std::uint64_t state_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace gme

#endif  // GME_RNG_HPP
