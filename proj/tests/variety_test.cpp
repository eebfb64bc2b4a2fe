#include "sl3cv/variety.hpp"

#include <gtest/gtest.h>

#include "sl3cv/rng.hpp"
#include "sl3cv/sampling.hpp"

using namespace sl3cv;

namespace {

TEST(Variety, ChiExamples) {
  CharPoint idp = chi(SL3Pair(ExactMat3::identity(), ExactMat3::identity()));
  for (const auto& v : idp.t) EXPECT_EQ(v, ExactComplex(3));
  // commuting images put the commutator trace at 3
  CharPoint dg = chi(SL3Pair(embed_diag(ExactComplex(2), ExactComplex(3)),
                             embed_diag(ExactComplex(5), ExactComplex(7))));
  EXPECT_EQ(dg.coord(5), ExactComplex(3));
  EXPECT_EQ(dg.coord(1), ExactComplex(2 + 3) + ExactComplex(mpq_class(1, 6)));
}

TEST(Variety, SurfaceResidual) {
  for (int s = 0; s < 50; ++s) {
    CharPoint pt = chi(sample_pair_generic(derive_seed(60, 0, s)));
    EXPECT_TRUE(surface_residual(pt).is_zero());
  }
  // off-surface witness: all threes with t(5) forced to 4 gives 16 − 24 + 9 = 1
  CharPoint off;
  off.t.fill(ExactComplex(3));
  off.coord(5) = ExactComplex(4);
  EXPECT_EQ(surface_residual(off), ExactComplex(1));
}

TEST(Variety, BranchingCharacterization) {
  // t(5) = t(-5) ⟺ discriminant zero, checked on both kinds of samples
  for (int s = 0; s < 25; ++s) {
    CharPoint red = chi(sample_pair_sl2(derive_seed(61, 0, s)));
    ExactComplex t5 = red.coord(5);
    ExactComplex tm5 = polynomial_P().eval(red.t) - t5;
    EXPECT_EQ(t5, tm5);
    EXPECT_TRUE(is_branching(red));
    CharPoint gen = chi(sample_pair_generic(derive_seed(61, 1, s)));
    EXPECT_EQ(is_branching(gen),
              gen.coord(5) == polynomial_P().eval(gen.t) - gen.coord(5));
  }
}

TEST(Variety, FiberVieta) {
  for (int s = 0; s < 20; ++s) {
    ApproxCharPoint pt = to_approx(chi(sample_pair_generic(derive_seed(62, 0, s), 6)));
    auto [r1, r2] = fiber_over(pt);
    std::complex<double> t5 = pt.t[8];
    std::complex<double> other = polynomial_P().eval(pt.t) - t5;
    double scale = 1.0 + std::max(std::abs(r1), std::abs(r2));
    bool direct = std::abs(r1 - t5) + std::abs(r2 - other) < 1e-6 * scale;
    bool crossed = std::abs(r2 - t5) + std::abs(r1 - other) < 1e-6 * scale;
    EXPECT_TRUE(direct || crossed);
  }
  // double root on the branching locus
  ApproxCharPoint red = to_approx(chi(sample_pair_sl2(63)));
  auto [r1, r2] = fiber_over(red);
  EXPECT_LT(std::abs(r1 - r2), 1e-7 * (1.0 + std::abs(r1)));
}

TEST(Variety, JacobianSystemShape) {
  const auto& sys = jacobian_system();
  // last generator is the t(5)-partial 2t(5) − P
  EXPECT_EQ(sys.gens[8],
            mpq_class(2) * Polynomial::variable(5) - polynomial_P());
  // base generators: −t(5)·∂P/∂t(i) + ∂Q/∂t(i)
  for (int i = 0; i < 8; ++i) {
    Polynomial expect = polynomial_Q().partial(kVarTags[i]) -
                        Polynomial::variable(5) * polynomial_P().partial(kVarTags[i]);
    EXPECT_EQ(sys.gens[i], expect);
  }
  // each generator is homogeneous of the negated variable bigrade
  for (int i = 0; i < 9; ++i) {
    auto bg = sys.gens[i].bigrade();
    ASSERT_TRUE(bg.has_value());
    Bigrade v = var_bigrade(kVarTags[i]);
    EXPECT_EQ(*bg, (Bigrade{(3 - v.g1) % 3, (3 - v.g2) % 3}));
  }
}

TEST(Variety, SingularFamilies) {
  for (int s = 0; s < 25; ++s) {
    EXPECT_TRUE(is_singular(chi(sample_pair_gl2(derive_seed(64, 0, s)))));
    EXPECT_TRUE(is_singular(chi(sample_pair_diag(derive_seed(64, 1, s)))));
    EXPECT_TRUE(is_singular(chi(sample_pair_sl2(derive_seed(64, 2, s)))));
    EXPECT_FALSE(is_singular(chi(sample_pair_generic(derive_seed(64, 3, s)))));
  }
}

TEST(Variety, OffSurfaceIsAnError) {
  CharPoint off;
  off.t.fill(ExactComplex(3));
  off.coord(5) = ExactComplex(4);
  EXPECT_THROW(is_singular(off), OffSurfaceError);
  ApproxCharPoint offf = to_approx(off);
  EXPECT_THROW(is_singular(offf, 1e-9), OffSurfaceError);
}

TEST(Variety, LambdaMatrix) {
  SL3Pair p = sample_pair_generic(65);
  LambdaMatrix L = lambda_matrix(p);
  // symmetric pairing: tr(AᵢAⱼ) = tr(AⱼAᵢ)
  for (int i = 0; i < 9; ++i)
    for (int j = 0; j < 9; ++j) EXPECT_EQ(L[i][j], L[j][i]);
  // the first diagonal entry is 3·tr(A²) − tr(A)²
  EXPECT_EQ(L[0][0], ExactComplex(3) * trace(p.A * p.A) - trace(p.A) * trace(p.A));
  for (int s = 0; s < 25; ++s)
    EXPECT_TRUE(lambda_det(sample_pair_generic(derive_seed(66, 0, s))).is_zero());
}

TEST(Variety, LambdaDetEliminationSanity) {
  // the determinant routine itself on matrices with known determinants
  LambdaMatrix M{};
  for (int i = 0; i < 9; ++i) M[i][i] = ExactComplex(i + 1);
  M[0][8] = ExactComplex(1);
  EXPECT_EQ(lambda_det(M), ExactComplex(362880));  // 9!
  // forcing rows 0 and 8 to cross swaps the 1 and 9 for a sign flip
  M[8][8] = ExactComplex(0);
  M[8][0] = ExactComplex(1);
  EXPECT_EQ(lambda_det(M), -ExactComplex(40320));
  M[8][0] = ExactComplex(0);  // an actual zero row
  EXPECT_TRUE(lambda_det(M).is_zero());
}

TEST(Variety, BranchingFamily) {
  auto bf = branching_family(2.0, 1.0);
  EXPECT_LT(std::abs(det(bf.A) - 1.0), 1e-12);
  EXPECT_LT(std::abs(det(bf.B) - 1.0), 1e-12);
  ApproxCharPoint pt = chi(bf.A, bf.B);
  EXPECT_LT(std::abs(surface_residual(pt)), 1e-9);
  EXPECT_LT(std::abs(discriminant(pt)), 1e-9);
  auto jv = jacobian_values(pt);
  auto [e1, e2] = branching_family_partials(2.0);
  EXPECT_LT(std::abs(jv[0] - e1), 1e-9);  // −343/64
  EXPECT_LT(std::abs(jv[1] - e2), 1e-9);  // 343/128
  EXPECT_NEAR(e1.real(), -343.0 / 64.0, 1e-12);
  EXPECT_NEAR(e2.real(), 343.0 / 128.0, 1e-12);
  for (int i = 2; i < 9; ++i) EXPECT_LT(std::abs(jv[i]), 1e-9);  // only two are nonzero
  EXPECT_FALSE(is_singular(pt, 1e-9));
  // another parameter choice: the partials do not depend on c
  auto bf2 = branching_family(3.0, 2.0);
  ApproxCharPoint pt2 = chi(bf2.A, bf2.B);
  auto jv2 = jacobian_values(pt2);
  auto [f1, f2] = branching_family_partials(3.0);
  EXPECT_LT(std::abs(jv2[0] - f1), 1e-7 * std::abs(f1));
  EXPECT_LT(std::abs(jv2[1] - f2), 1e-7 * std::abs(f2));
  EXPECT_LT(std::abs(discriminant(pt2)), 1e-6);
  EXPECT_THROW(branching_family(1.0, 1.0), std::domain_error);
  EXPECT_THROW(branching_family(2.0, 0.0), std::domain_error);
}

TEST(Variety, DistinguishingPair) {
  auto d = distinguishing_pair();
  EXPECT_LT(std::abs(det(d.B1) - 1.0), 1e-12);
  EXPECT_LT(std::abs(det(d.B2) - 1.0), 1e-12);
  for (int i = 0; i < 8; ++i) EXPECT_LT(std::abs(d.rho1.t[i] - d.rho2.t[i]), 1e-9);
  EXPECT_GT(std::abs(d.rho1.t[8] - d.rho2.t[8]), 1e-3);
  EXPECT_LT(std::abs(surface_residual(d.rho1)), 1e-9);
  EXPECT_LT(std::abs(surface_residual(d.rho2)), 1e-9);
  // the two t(5) values are the two fiber roots over the shared base
  auto [r1, r2] = fiber_over(d.rho1);
  double m1 = std::min(std::abs(r1 - d.rho1.t[8]), std::abs(r2 - d.rho1.t[8]));
  double m2 = std::min(std::abs(r1 - d.rho2.t[8]), std::abs(r2 - d.rho2.t[8]));
  EXPECT_LT(m1, 1e-7);
  EXPECT_LT(m2, 1e-7);
}

TEST(Variety, GenericPointsAreNonBranching) {
  // one-retry policy: a generic draw may hit the measure-zero locus once
  int hits = 0;
  for (int s = 0; s < 25; ++s) {
    CharPoint pt = chi(sample_pair_generic(derive_seed(67, 0, s)));
    if (is_branching(pt)) {
      ++hits;
      CharPoint retry = chi(sample_pair_generic(derive_seed(67, 1, s)));
      EXPECT_FALSE(is_branching(retry));
    }
  }
  EXPECT_LE(hits, 1);
}

}  // namespace
