#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "sieved/laurent.hpp"

namespace sieved {

/// Portable uniform doubles in [0, 1) from mt19937_64, whose output
/// sequence is fixed by the standard (unlike the std distributions).
class UnitRng {
 public:
  explicit UnitRng(std::uint64_t seed) : engine_(seed) {}
  double next() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  cplx next_complex() {
    const double re = next();
    return {re, next()};
  }

 private:
  std::mt19937_64 engine_;
};

/// `count` Laurent polynomials with every exponent in [lo, hi] present and
/// coefficients drawn from the unit square [0,1) x [0,1).
std::vector<LaurentPoly> random_panel(std::uint64_t seed, int count = 20, int lo = -8, int hi = 8);

}  // namespace sieved
