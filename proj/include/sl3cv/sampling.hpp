#pragma once

#include <cstdint>

#include "sl3cv/matrix3.hpp"
#include "sl3cv/rng.hpp"

namespace sl3cv {

// Product of `complexity` transvections I + q·E_jk with small nonzero
// Gaussian-rational q: determinant 1 by construction, deterministic in the
// seed, complexity 0 gives the identity.
inline ExactMat3 random_sl3(std::uint64_t seed, int complexity) {
  SplitMix64 g(seed);
  ExactMat3 m = ExactMat3::identity();
  // off-diagonal slots (j,k), j != k
  static constexpr int slots[6][2] = {{0, 1}, {0, 2}, {1, 0}, {1, 2}, {2, 0}, {2, 1}};
  for (int i = 0; i < complexity; ++i) {
    const int* jk = slots[g.below(6)];
    ExactComplex q = small_gaussian_rational(g);
    ExactMat3 t = ExactMat3::identity();
    t.at(jk[0], jk[1]) = q;
    m = m * t;
  }
  return m;
}

// Complexity for "generic" pairs.  Transvection products with tiny discrete
// entries land on the reducible (singular) locus with noticeable probability
// at low complexity (~4% of pairs at 6 factors, ~0.5% at 8); at 10 factors no
// singular hit was observed in calibration runs, and the one-retry policy
// covers the residual probability.
inline constexpr int kGenericComplexity = 10;

inline SL3Pair sample_pair_generic(std::uint64_t seed, int complexity = kGenericComplexity) {
  return {random_sl3(derive_seed(seed, 1, 0), complexity),
          random_sl3(derive_seed(seed, 1, 1), complexity)};
}

namespace detail {

// invertible 2×2 parameter block with small Gaussian-rational entries
inline void draw_gl2(SplitMix64& g, ExactComplex& a, ExactComplex& b, ExactComplex& c,
                     ExactComplex& d) {
  for (;;) {
    a = {small_rational(g), small_rational(g)};
    b = {small_rational(g), small_rational(g)};
    c = {small_rational(g), small_rational(g)};
    d = {small_rational(g), small_rational(g)};
    if (!(a * d - b * c).is_zero()) return;
  }
}

// 2×2 unimodular matrix as a product of elementary shears
inline void draw_sl2(SplitMix64& g, ExactComplex& a, ExactComplex& b, ExactComplex& c,
                     ExactComplex& d, int factors = 6) {
  a = d = ExactComplex(1);
  b = c = ExactComplex(0);
  for (int i = 0; i < factors; ++i) {
    ExactComplex q = small_gaussian_rational(g);
    if (g.below(2) == 0) {  // right-multiply by [[1,q],[0,1]]
      b = a * q + b;
      d = c * q + d;
    } else {  // right-multiply by [[1,0],[q,1]]
      a = a + b * q;
      c = c + d * q;
    }
  }
}

}  // namespace detail

// both images inside the embedded GL(2) block
inline SL3Pair sample_pair_gl2(std::uint64_t seed) {
  SplitMix64 g(seed);
  ExactComplex a, b, c, d;
  detail::draw_gl2(g, a, b, c, d);
  ExactMat3 A = embed_gl2(a, b, c, d);
  detail::draw_gl2(g, a, b, c, d);
  return {A, embed_gl2(a, b, c, d)};
}

// both images diagonal diag(a, b, 1/ab)
inline SL3Pair sample_pair_diag(std::uint64_t seed) {
  SplitMix64 g(seed);
  auto draw = [&g] {
    for (;;) {
      ExactComplex v(small_rational(g), small_rational(g));
      if (!v.is_zero()) return v;
    }
  };
  ExactMat3 A = embed_diag(draw(), draw());
  return {A, embed_diag(draw(), draw())};
}

// both images in the embedded SL(2): ad − bc = 1, lower-right entry 1
inline SL3Pair sample_pair_sl2(std::uint64_t seed) {
  SplitMix64 g(seed);
  ExactComplex a, b, c, d;
  detail::draw_sl2(g, a, b, c, d);
  ExactMat3 A = embed_gl2(a, b, c, d);
  detail::draw_sl2(g, a, b, c, d);
  return {A, embed_gl2(a, b, c, d)};
}

}  // namespace sl3cv
