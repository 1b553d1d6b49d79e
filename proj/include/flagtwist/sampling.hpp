#ifndef FLAGTWIST_SAMPLING_HPP
#define FLAGTWIST_SAMPLING_HPP

#include <random>

#include "flagtwist/gq.hpp"

namespace flagtwist {

/// Deterministic sample stream of small exact scalars. mt19937_64 output is
/// fixed by the standard, so seeds reproduce across platforms.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed, long bound = 20)
      : rng_(seed), bound_(bound) {}

  long small_int(long lo, long hi) {
    return lo + static_cast<long>(rng_() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  Rational rational() {
    long num = small_int(-bound_, bound_);
    long den = small_int(1, bound_);
    return rat_frac(num, den);
  }

  Rational nonzero_rational() {
    for (;;) {
      auto q = rational();
      if (q != 0) return q;
    }
  }

  GQ gaussian() { return GQ(rational(), rational()); }

  GQ nonzero_gaussian() {
    for (;;) {
      auto z = gaussian();
      if (!z.is_zero()) return z;
    }
  }

 private:
  std::mt19937_64 rng_;
  long bound_;
};

}  // namespace flagtwist

#endif
