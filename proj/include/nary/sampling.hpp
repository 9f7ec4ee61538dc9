#pragma once

#include "nary/rational.hpp"

#include <cstdint>
#include <random>

namespace nary {

/// Deterministic source of small integers and rationals. mt19937_64 has a
/// fully specified output sequence and the reduction below avoids the
/// implementation-defined standard distributions, so a seed reproduces the
/// same values on every platform.
class RationalSampler {
public:
  explicit RationalSampler(std::uint64_t seed) : engine_(seed) {}

  /// Uniform-ish integer in [lo, hi].
  long integer(long lo, long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<long>(engine_() % span);
  }

  /// a/b with |a| <= max_num, 1 <= b <= max_den.
  Rational rational(long max_num = 9, long max_den = 9) {
    const long num = integer(-max_num, max_num);
    const long den = integer(1, max_den);
    return Rational(num, den);
  }

  /// Nonzero a/b.
  Rational nonzero_rational(long max_num = 9, long max_den = 9) {
    Rational r;
    do r = rational(max_num, max_den);
    while (r.is_zero());
    return r;
  }

private:
  std::mt19937_64 engine_;
};

}  // namespace nary
