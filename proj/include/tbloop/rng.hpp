// Deterministic random draws: splitmix64 underneath, with the distributions
// implemented here so the same seed yields the same stream on every platform.

#pragma once

#include <complex>
#include <cstdint>

#include "tbloop/cyclo.hpp"

namespace tbloop {

class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // uniform integer in [lo, hi]
  long integer(long lo, long hi) {
    return lo + static_cast<long>(next() % static_cast<uint64_t>(hi - lo + 1));
  }

  double uniform(double lo = 0.0, double hi = 1.0) {
    return lo + (hi - lo) * (static_cast<double>(next() >> 11) * 0x1.0p-53);
  }

  bool coin() { return next() & 1; }

  // nonzero rational p/q with small numerator and denominator, p/q != +-1
  Rat rational(long max_abs = 9) {
    while (true) {
      long p = integer(-max_abs, max_abs);
      long q = integer(1, max_abs);
      if (p == 0 || p == q || p == -q) continue;
      return make_rat(p, q);
    }
  }
  Rat positive_rational(long max_abs = 9) {
    while (true) {
      long p = integer(2, max_abs + 3);
      long q = integer(2, max_abs + 3);
      if (p == q) continue;
      return make_rat(p, q);
    }
  }

  Cyclo exact_point(long max_abs = 9) { return Cyclo(positive_rational(max_abs)); }

  // point near the unit circle: exp(i pi p/q) with a small radial perturbation
  std::complex<double> unit_point(double radial = 0.05) {
    double theta = 3.14159265358979323846 * uniform(-1.0, 1.0);
    double r = 1.0 + radial * uniform(-1.0, 1.0);
    return std::polar(r, theta);
  }

  std::complex<double> complex_box(double lo = -1.0, double hi = 1.0) {
    return {uniform(lo, hi), uniform(lo, hi)};
  }

 private:
  uint64_t state_;
};

}  // namespace tbloop
