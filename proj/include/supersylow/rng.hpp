#ifndef SUPERSYLOW_RNG_HPP
#define SUPERSYLOW_RNG_HPP

#include "supersylow/rational.hpp"

#include <cstdint>
#include <random>

namespace supersylow {

// All randomized routines take one of these so runs are reproducible from
// a single seed recorded in reports.
struct Rng {
  std::mt19937_64 eng;
  explicit Rng(uint64_t seed) : eng(seed) {}

  long uniform_int(long lo, long hi) {  // inclusive
    std::uniform_int_distribution<long> d(lo, hi);
    return d(eng);
  }

  // Small rational with numerator in [-range, range], denominator in {1, 2}.
  Rat small_rat(long range = 3) {
    long num = uniform_int(-range, range);
    long den = uniform_int(1, 2);
    return rat(num, den);
  }

  Vec small_vec(int n, long range = 3) {
    Vec v(n);
    for (int i = 0; i < n; ++i) v[i] = small_rat(range);
    return v;
  }

  // Nonzero variant; retries until some coordinate is nonzero.
  Vec small_vec_nonzero(int n, long range = 3) {
    for (int tries = 0; tries < 64; ++tries) {
      Vec v = small_vec(n, range);
      if (!vec_is_zero(v)) return v;
    }
    Vec v(n, Rat(0));
    if (n > 0) v[0] = 1;
    return v;
  }
};

}  // namespace supersylow

#endif
