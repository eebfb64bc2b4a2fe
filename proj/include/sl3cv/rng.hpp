#pragma once

#include <cstdint>

#include "sl3cv/exact_complex.hpp"

namespace sl3cv {

// splitmix64: tiny, seedable, identical output on every platform (std::
// distributions are implementation-defined, which would break byte-identical
// CLI output across toolchains)
struct SplitMix64 {
  std::uint64_t s;
  explicit SplitMix64(std::uint64_t seed) : s(seed) {}

  std::uint64_t next() {
    s += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = s;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // unbiased value in [0, n) by rejection
  std::uint64_t below(std::uint64_t n) {
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t v;
    do {
      v = next();
    } while (v >= limit);
    return v % n;
  }

  // inclusive range
  long range(long lo, long hi) {
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }
};

// independent per-trial stream from (master seed, stream, index)
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream, std::uint64_t index) {
  SplitMix64 g(master ^ (0x9e3779b97f4a7c15ULL * (stream + 1)));
  SplitMix64 h(g.next() ^ (0xbf58476d1ce4e5b9ULL * (index + 1)));
  h.next();
  return h.next();
}

// rational with |numerator| ≤ 3, denominator ≤ 3 (may be zero)
inline mpq_class small_rational(SplitMix64& g) {
  long num = g.range(-3, 3);
  long den = g.range(1, 3);
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

// small nonzero Gaussian rational
inline ExactComplex small_gaussian_rational(SplitMix64& g) {
  for (;;) {
    ExactComplex q(small_rational(g), small_rational(g));
    if (!q.is_zero()) return q;
  }
}

}  // namespace sl3cv
