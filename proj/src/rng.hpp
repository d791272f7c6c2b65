#pragma once

#include <cstdint>

#include "rational.hpp"

namespace treespace {

// splitmix64; fixed algorithm so that seeded runs are byte-identical
// across platforms (standard-library distributions are not).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n).
  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }

  bool coin() { return next() & 1u; }

  // Dyadic rational in [0, 1] with the given denominator power.
  Rat unit_dyadic(int denom_pow = 6) {
    std::uint64_t den = std::uint64_t{1} << denom_pow;
    return Rat(static_cast<long>(below(den + 1)), static_cast<long>(den));
  }

  // Dyadic rational in [-1, 1].
  Rat signed_dyadic(int denom_pow = 6) {
    Rat r = unit_dyadic(denom_pow);
    return coin() ? r : -r;
  }

 private:
  std::uint64_t state_;
};

}  // namespace treespace
