#include "sl3cv/io.hpp"

#include <gtest/gtest.h>

#include <set>

#include "sl3cv/rng.hpp"
#include "sl3cv/sampling.hpp"

using namespace sl3cv;

namespace {

TEST(IoScalar, ExactRoundTrip) {
  for (const char* s : {"0", "5", "-7", "2/3", "1+1/2i", "-1/3-2i", "i", "-i", "3i"}) {
    ExactComplex z = exact_from_json(json(std::string(s)));
    EXPECT_EQ(exact_from_json(json(to_string(z))), z) << s;
  }
  // integer shorthand: a bare JSON integer is accepted too
  EXPECT_EQ(exact_from_json(json(5)), ExactComplex(5));
  EXPECT_EQ(exact_from_json(json(-3)), ExactComplex(-3));
  EXPECT_THROW(exact_from_json(json(1.5)), std::invalid_argument);
  EXPECT_THROW(exact_from_json(json::array()), std::invalid_argument);
}

TEST(IoScalar, ApproxForms) {
  EXPECT_EQ(approx_to_json(std::complex<double>(2.5, 0.0)), json(2.5));
  EXPECT_EQ(approx_to_json(std::complex<double>(1.0, -2.0)), json::array({1.0, -2.0}));
  EXPECT_EQ(approx_from_json(json(2.5)), std::complex<double>(2.5, 0.0));
  EXPECT_EQ(approx_from_json(json::array({1.0, -2.0})), std::complex<double>(1.0, -2.0));
  // rational strings are a convenience on input
  EXPECT_EQ(approx_from_json(json("1/2")), std::complex<double>(0.5, 0.0));
  EXPECT_EQ(approx_from_json(json("-i")), std::complex<double>(0.0, -1.0));
  EXPECT_THROW(approx_from_json(json::object()), std::invalid_argument);
  EXPECT_THROW(approx_from_json(json::array({1.0})), std::invalid_argument);
}

TEST(IoMatrix, RoundTrip) {
  SL3Pair p = sample_pair_generic(700);
  ExactMat3 back = matrix_from_json(matrix_to_json(p.A));
  EXPECT_EQ(back, p.A);
}

TEST(IoMatrix, ShapeErrors) {
  EXPECT_THROW(matrix_from_json(json::array({1, 2, 3})), std::invalid_argument);
  EXPECT_THROW(matrix_from_json(json::object()), std::invalid_argument);
  json bad = json::array();
  for (int r = 0; r < 3; ++r) bad.push_back(json::array({1, 2}));
  EXPECT_THROW(matrix_from_json(bad), std::invalid_argument);
}

TEST(IoPair, RoundTripAndValidation) {
  SL3Pair p = sample_pair_gl2(701);
  SL3Pair back = pair_from_json(pair_to_json(p));
  EXPECT_EQ(back.A, p.A);
  EXPECT_EQ(back.B, p.B);
  EXPECT_THROW(pair_from_json(json{{"A", matrix_to_json(p.A)}}), std::invalid_argument);
  // a non-unimodular B is rejected by the pair constructor with the slot named
  json j = pair_to_json(p);
  j["B"] = json::array({json::array({"2", "0", "0"}), json::array({"0", "1", "0"}),
                        json::array({"0", "0", "1"})});
  try {
    pair_from_json(j);
    FAIL() << "expected NonUnimodularError";
  } catch (const NonUnimodularError& e) {
    EXPECT_EQ(e.which, 'B');
  }
}

TEST(IoPoint, ExactRoundTrip) {
  CharPoint pt = chi(sample_pair_generic(702));
  json j = point_to_json(pt);
  // exactly the nine fixed keys
  std::set<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.insert(it.key());
  EXPECT_EQ(keys, (std::set<std::string>{"t1", "tm1", "t2", "tm2", "t3", "tm3", "t4",
                                         "tm4", "t5"}));
  EXPECT_EQ(point_from_json(j).t, pt.t);
  j.erase("tm3");
  EXPECT_THROW(point_from_json(j), std::invalid_argument);
  EXPECT_THROW(point_from_json(json::array()), std::invalid_argument);
}

TEST(IoPoint, ApproxRoundTrip) {
  ApproxCharPoint pt = to_approx(chi(sample_pair_generic(703)));
  json j = point_to_json(pt);
  ApproxCharPoint back = approx_point_from_json(j);
  for (int i = 0; i < 9; ++i) EXPECT_EQ(back.t[i], pt.t[i]);
  // integer JSON values are fine on the approx path as well
  json flat = json::object();
  for (int tag : kVarTags) flat[coord_key(tag)] = 3;
  ApproxCharPoint threes = approx_point_from_json(flat);
  for (int i = 0; i < 9; ++i) EXPECT_EQ(threes.t[i], std::complex<double>(3.0, 0.0));
}

TEST(IoTrace, StepShape) {
  TraceRewriter rw;
  RewriteTrace tr;
  rw.reduce(Word::parse("a^3*b"), &tr);
  json arr = trace_to_json(tr);
  ASSERT_TRUE(arr.is_array());
  ASSERT_FALSE(arr.empty());
  const std::set<std::string> known = {"base",   "memo",   "cyclic", "power",
                                       "cpower", "gather"};
  for (const auto& step : arr) {
    ASSERT_TRUE(step.contains("rule"));
    ASSERT_TRUE(step.contains("before"));
    ASSERT_TRUE(step.contains("after"));
    EXPECT_TRUE(known.count(step["rule"].get<std::string>()))
        << step["rule"].get<std::string>();
    for (const auto& pr : step["after"]) {
      EXPECT_TRUE(pr.contains("coeff"));
      EXPECT_TRUE(pr.contains("factors"));
      EXPECT_TRUE(pr.contains("poly"));
      // coefficients parse back as rationals
      EXPECT_NO_THROW(detail::parse_rational(pr["coeff"].get<std::string>()));
      // the polynomial field parses in the quotient ring
      EXPECT_NO_THROW(CoordPolynomial::parse(pr["poly"].get<std::string>()));
    }
  }
}

TEST(IoTrace, CoordKeys) {
  EXPECT_EQ(coord_key(1), "t1");
  EXPECT_EQ(coord_key(-1), "tm1");
  EXPECT_EQ(coord_key(5), "t5");
  EXPECT_EQ(coord_key(-4), "tm4");
}

}  // namespace
