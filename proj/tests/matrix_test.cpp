#include "sl3cv/matrix3.hpp"

#include <gtest/gtest.h>

#include <stdexcept>

#include "sl3cv/rng.hpp"
#include "sl3cv/sampling.hpp"

using namespace sl3cv;

namespace {

ExactMat3 random_matrix(SplitMix64& g) {
  ExactMat3 m;
  for (int i = 0; i < 9; ++i) m.e[i] = ExactComplex(small_rational(g), small_rational(g));
  return m;
}

TEST(ExactComplex, FieldOps) {
  ExactComplex z(mpq_class(1, 2), mpq_class(-2, 3));
  EXPECT_EQ(z + (-z), ExactComplex(0));
  EXPECT_EQ(z * z.inverse(), ExactComplex(1));
  EXPECT_EQ(z * z.conj(), ExactComplex(z.norm()));
  EXPECT_EQ((z / z), ExactComplex(1));
  EXPECT_THROW(ExactComplex(0).inverse(), std::domain_error);
}

TEST(ExactComplex, StringRoundTrip) {
  const char* forms[] = {"0",      "5",     "-3",       "2/3",      "-7/4", "1+2i",
                         "1/2-2/3i", "-i",  "i",        "3i",       "-5/2i", "1/3+i"};
  for (const char* f : forms) {
    ExactComplex z = parse_exact_complex(f);
    EXPECT_EQ(parse_exact_complex(to_string(z)), z) << f;
  }
  EXPECT_EQ(to_string(ExactComplex(mpq_class(1, 2), mpq_class(3, 2))), "1/2+3/2i");
  EXPECT_EQ(to_string(ExactComplex(0, mpq_class(-1))), "0-1i");
  EXPECT_EQ(parse_exact_complex(" 1/2 + 3/2 i"), parse_exact_complex("1/2+3/2i"));
  EXPECT_THROW(parse_exact_complex(""), std::invalid_argument);
  EXPECT_THROW(parse_exact_complex("blah"), std::invalid_argument);
  EXPECT_THROW(parse_exact_complex("1/0"), std::invalid_argument);
}

TEST(Matrix, DetAndAdjugate) {
  EXPECT_EQ(det(ExactMat3::identity()), ExactComplex(1));
  EXPECT_EQ(det(embed_diag(ExactComplex(2), ExactComplex(3))), ExactComplex(1));
  EXPECT_EQ(adjugate(ExactMat3::identity()), ExactMat3::identity());
  SplitMix64 g{10};
  for (int i = 0; i < 50; ++i) {
    ExactMat3 m = random_matrix(g);
    ExactMat3 d = det(m) * ExactMat3::identity();
    EXPECT_EQ(m * adjugate(m), d);
    EXPECT_EQ(adjugate(m) * m, d);
    ExactMat3 n = random_matrix(g);
    EXPECT_EQ(adjugate(m * n), adjugate(n) * adjugate(m));
  }
}

TEST(Matrix, NewtonTraceFormulas) {
  ExactComplex half(mpq_class(1, 2)), third(mpq_class(1, 3)), sixth(mpq_class(1, 6));
  SplitMix64 g{11};
  for (int i = 0; i < 50; ++i) {
    ExactMat3 m = random_matrix(g);
    EXPECT_EQ(det(m), third * trace(m * m * m) + sixth * trace(m) * trace(m) * trace(m) -
                          half * trace(m) * trace(m * m));
    ExactMat3 u = random_sl3(derive_seed(11, 0, i), 4);
    EXPECT_EQ(trace(adjugate(u)), half * (trace(u) * trace(u) - trace(u * u)));
  }
}

TEST(Matrix, SL3PairValidation) {
  ExactMat3 bad = ExactMat3::diag(ExactComplex(2), ExactComplex(1), ExactComplex(1));
  try {
    SL3Pair p(bad, ExactMat3::identity());
    FAIL() << "accepted det 2";
  } catch (const NonUnimodularError& e) {
    EXPECT_EQ(e.which, 'A');
  }
  try {
    SL3Pair p(ExactMat3::identity(), bad);
    FAIL() << "accepted det 2";
  } catch (const NonUnimodularError& e) {
    EXPECT_EQ(e.which, 'B');
  }
}

TEST(Matrix, EvaluateWord) {
  SL3Pair p = sample_pair_generic(21);
  EXPECT_EQ(evaluate_word(Word{}, p), ExactMat3::identity());
  EXPECT_EQ(evaluate_word(Word::parse("a*A"), p), ExactMat3::identity());
  SL3Pair id(ExactMat3::identity(), ExactMat3::identity());
  EXPECT_EQ(trace(evaluate_word(Word::parse("a*b*A*B"), id)), ExactComplex(3));
  // monoid homomorphism
  SplitMix64 g{12};
  for (int i = 0; i < 30; ++i) {
    Word w1, w2;
    for (long k = 0; k < 4; ++k) {
      w1.append({1 + static_cast<int>(g.below(2)), g.below(2) ? 1 : -1});
      w2.append({1 + static_cast<int>(g.below(2)), g.below(2) ? 1 : -1});
    }
    EXPECT_EQ(evaluate_word(w1 * w2, p), evaluate_word(w1, p) * evaluate_word(w2, p));
  }
  // inverse letters really invert
  EXPECT_EQ(evaluate_word(Word::parse("a^-1"), p) * p.A, ExactMat3::identity());
}

TEST(Matrix, TraceCoordinatesMatchWords) {
  SL3Pair p = sample_pair_generic(22);
  auto tc = trace_coordinates(p.A, p.B);
  const char* words[] = {"a", "A", "b", "B", "a*b", "A*B", "a*B", "A*b", "a*b*A*B"};
  for (int i = 0; i < 9; ++i)
    EXPECT_EQ(tc[i], trace(evaluate_word(Word::parse(words[i]), p))) << words[i];
}

TEST(Matrix, Embeddings) {
  EXPECT_EQ(embed_gl2(ExactComplex(1), ExactComplex(0), ExactComplex(0), ExactComplex(1)),
            ExactMat3::identity());
  ExactMat3 m = embed_gl2(ExactComplex(2), ExactComplex(1), ExactComplex(1), ExactComplex(1));
  EXPECT_EQ(det(m), ExactComplex(1));
  EXPECT_EQ(m.at(2, 2), ExactComplex(1));  // ad - bc = 1
  EXPECT_THROW(embed_gl2(ExactComplex(1), ExactComplex(1), ExactComplex(1), ExactComplex(1)),
               std::domain_error);
  EXPECT_EQ(embed_diag(ExactComplex(1), ExactComplex(1)), ExactMat3::identity());
  EXPECT_EQ(embed_diag(ExactComplex(2), ExactComplex(3)).at(2, 2),
            ExactComplex(mpq_class(1, 6)));
  EXPECT_THROW(embed_diag(ExactComplex(0), ExactComplex(1)), std::domain_error);
  // diagonal images commute
  ExactMat3 d1 = embed_diag(ExactComplex(2), ExactComplex(3));
  ExactMat3 d2 = embed_diag(ExactComplex(5), ExactComplex(7));
  EXPECT_EQ(d1 * d2, d2 * d1);
}

TEST(Sampling, RandomSL3) {
  EXPECT_EQ(random_sl3(123, 0), ExactMat3::identity());
  EXPECT_EQ(random_sl3(123, 7), random_sl3(123, 7));  // deterministic
  EXPECT_NE(random_sl3(123, 7), random_sl3(124, 7));
  for (int s = 0; s < 30; ++s) EXPECT_EQ(det(random_sl3(s, 10)), ExactComplex(1));
}

TEST(Sampling, Families) {
  for (int s = 0; s < 10; ++s) {
    SL3Pair g = sample_pair_generic(s);
    EXPECT_EQ(det(g.A), ExactComplex(1));
    SL3Pair l2 = sample_pair_gl2(s);
    EXPECT_EQ(l2.A.at(0, 2), ExactComplex(0));  // embedded block shape
    EXPECT_EQ(l2.A.at(2, 0), ExactComplex(0));
    SL3Pair dg = sample_pair_diag(s);
    EXPECT_EQ(dg.A * dg.B, dg.B * dg.A);
    SL3Pair s2 = sample_pair_sl2(s);
    EXPECT_EQ(s2.A.at(2, 2), ExactComplex(1));  // det of the 2×2 block is 1
    EXPECT_EQ(s2.B.at(2, 2), ExactComplex(1));
  }
  // per-family determinism
  EXPECT_EQ(sample_pair_gl2(5).A, sample_pair_gl2(5).A);
}

TEST(Matrix, ApproxPath) {
  SL3Pair p = sample_pair_generic(33);
  ApproxMat3 a = to_approx(p.A), b = to_approx(p.B);
  auto tc = trace_coordinates(a, b);
  auto te = trace_coordinates(p.A, p.B);
  for (int i = 0; i < 9; ++i)
    EXPECT_LT(std::abs(tc[i] - te[i].to_complex()), 1e-6 * (1.0 + std::abs(tc[i])));
}

}  // namespace
