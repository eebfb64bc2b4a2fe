#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <utility>

#include "sl3cv/coord_poly.hpp"
#include "sl3cv/matrix3.hpp"
#include "sl3cv/word.hpp"

namespace sl3cv {

// ------------------------------------------------------------------
// Points of the variety: the nine trace coordinates in the fixed order
// t(1), t(-1), t(2), t(-2), t(3), t(-3), t(4), t(-4), t(5).
// ------------------------------------------------------------------
template <typename T>
struct BasicCharPoint {
  std::array<T, 9> t{};

  T& operator[](int i) { return t[static_cast<std::size_t>(i)]; }
  const T& operator[](int i) const { return t[static_cast<std::size_t>(i)]; }
  T& coord(int tag) { return t[static_cast<std::size_t>(var_index(tag))]; }
  const T& coord(int tag) const { return t[static_cast<std::size_t>(var_index(tag))]; }

  friend bool operator==(const BasicCharPoint&, const BasicCharPoint&) = default;
};

using CharPoint = BasicCharPoint<ExactComplex>;
using ApproxCharPoint = BasicCharPoint<std::complex<double>>;

inline ApproxCharPoint to_approx(const CharPoint& p) {
  ApproxCharPoint q;
  for (int i = 0; i < 9; ++i) q.t[i] = p.t[i].to_complex();
  return q;
}

// the coordinate map: a determinant-1 pair to its nine trace coordinates
template <typename T>
BasicCharPoint<T> chi(const Mat3<T>& A, const Mat3<T>& B) {
  return {trace_coordinates(A, B)};
}

inline CharPoint chi(const SL3Pair& p) { return chi(p.A, p.B); }

// t(5)² − P·t(5) + Q at the point; identically zero on coordinate images
template <typename T>
T surface_residual(const BasicCharPoint<T>& pt) {
  T t5 = pt.t[8];
  return t5 * t5 - polynomial_P().eval(pt.t) * t5 + polynomial_Q().eval(pt.t);
}

// P² − 4Q on the base ℂ⁸ (t(5) plays no role in P, Q)
template <typename T>
T discriminant(const std::array<T, 8>& base) {
  std::array<T, 9> full{};
  for (int i = 0; i < 8; ++i) full[i] = base[i];
  T p = polynomial_P().eval(full), q = polynomial_Q().eval(full);
  return p * p - T(4) * q;
}

template <typename T>
T discriminant(const BasicCharPoint<T>& pt) {
  std::array<T, 8> base;
  for (int i = 0; i < 8; ++i) base[i] = pt.t[i];
  return discriminant(base);
}

// on the branching locus the two sheets meet: t(5) = t(-5)
inline bool is_branching(const CharPoint& pt) { return discriminant(pt).is_zero(); }
inline bool is_branching(const ApproxCharPoint& pt, double tol = 1e-9) {
  return std::abs(discriminant(pt)) < tol;
}

// The two t(5) roots above a base point, numerically stable: the root of
// larger magnitude is taken from P ± √disc with the non-cancelling sign, the
// other recovered from the product Q.
inline std::pair<std::complex<double>, std::complex<double>> fiber_over(
    const std::array<std::complex<double>, 8>& base) {
  std::array<std::complex<double>, 9> full{};
  for (int i = 0; i < 8; ++i) full[i] = base[i];
  std::complex<double> p = polynomial_P().eval(full), q = polynomial_Q().eval(full);
  std::complex<double> s = std::sqrt(p * p - 4.0 * q);
  if ((std::conj(p) * s).real() < 0) s = -s;
  std::complex<double> r1 = (p + s) / 2.0;
  std::complex<double> r2 = r1 != 0.0 ? q / r1 : p - r1;
  return {r1, r2};
}

inline std::pair<std::complex<double>, std::complex<double>> fiber_over(
    const ApproxCharPoint& pt) {
  std::array<std::complex<double>, 8> base;
  for (int i = 0; i < 8; ++i) base[i] = pt.t[i];
  return fiber_over(base);
}

// ------------------------------------------------------------------
// The Jacobian system of the defining equation F = t(5)² − P·t(5) + Q:
// formal partials in the free ring, −t(5)·∂P/∂t(i) + ∂Q/∂t(i) for the eight
// base coordinates and 2t(5) − P for the last.
// ------------------------------------------------------------------
struct JacobianSystem {
  std::array<Polynomial, 9> gens;  // indexed like the coordinates
};

inline const JacobianSystem& jacobian_system() {
  static const JacobianSystem sys = [] {
    JacobianSystem s;
    Polynomial F = surface_polynomial_free();
    for (int i = 0; i < 9; ++i) s.gens[i] = F.partial(kVarTags[i]);
    return s;
  }();
  return sys;
}

template <typename T>
std::array<T, 9> jacobian_values(const BasicCharPoint<T>& pt) {
  std::array<T, 9> out;
  for (int i = 0; i < 9; ++i) out[i] = jacobian_system().gens[i].eval(pt.t);
  return out;
}

struct OffSurfaceError : std::runtime_error {
  OffSurfaceError()
      : std::runtime_error("point does not satisfy the surface equation; "
                           "singularity is undefined off the surface") {}
};

// all nine Jacobian generators vanish ⟺ the point is singular on the surface
inline bool is_singular(const CharPoint& pt) {
  if (!surface_residual(pt).is_zero()) throw OffSurfaceError();
  for (const auto& v : jacobian_values(pt))
    if (!v.is_zero()) return false;
  return true;
}

namespace detail {
inline double max_coeff_magnitude(const Polynomial& p) {
  double m = 1.0;
  for (const auto& [mono, c] : p.terms()) {
    (void)mono;
    double a = std::abs(mpq_class(abs(c)).get_d());
    if (a > m) m = a;
  }
  return m;
}
}  // namespace detail

// float path: vanishing thresholds scale with each generator's largest
// coefficient magnitude
inline bool is_singular(const ApproxCharPoint& pt, double tol = 1e-9) {
  if (std::abs(surface_residual(pt)) >
      tol * detail::max_coeff_magnitude(surface_polynomial_free()))
    throw OffSurfaceError();
  for (int i = 0; i < 9; ++i) {
    double scale = detail::max_coeff_magnitude(jacobian_system().gens[i]);
    if (std::abs(jacobian_system().gens[i].eval(pt.t)) > tol * scale) return false;
  }
  return true;
}

// ------------------------------------------------------------------
// The 9×9 pairing matrix Λ(i,j) = 3·tr(AᵢAⱼ) − tr(Aᵢ)tr(Aⱼ) over the fixed
// nine-word list; it is singular at every pair.
// ------------------------------------------------------------------
inline const std::array<Word, 9>& lambda_words() {
  static const std::array<Word, 9> ws = {
      Word::parse("a"),   Word::parse("b"),   Word::parse("A"),
      Word::parse("B"),   Word::parse("a*b"), Word::parse("b*a"),
      Word::parse("a*B"), Word::parse("B*a"), Word::parse("b*A")};
  return ws;
}

using LambdaMatrix = std::array<std::array<ExactComplex, 9>, 9>;

inline LambdaMatrix lambda_matrix(const SL3Pair& p) {
  std::array<ExactMat3, 9> m;
  std::array<ExactComplex, 9> tr9;
  for (int i = 0; i < 9; ++i) {
    m[i] = evaluate_word(lambda_words()[i], p);
    tr9[i] = trace(m[i]);
  }
  LambdaMatrix L;
  for (int i = 0; i < 9; ++i)
    for (int j = 0; j < 9; ++j)
      L[i][j] = ExactComplex(3) * trace(m[i] * m[j]) - tr9[i] * tr9[j];
  return L;
}

// exact determinant by fraction-free-enough Gaussian elimination over the
// Gaussian rationals
inline ExactComplex lambda_det(LambdaMatrix L) {
  ExactComplex det(1);
  for (int col = 0; col < 9; ++col) {
    int pivot = -1;
    for (int r = col; r < 9; ++r)
      if (!L[r][col].is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) return ExactComplex(0);
    if (pivot != col) {
      std::swap(L[pivot], L[col]);
      det = -det;
    }
    det = det * L[col][col];
    ExactComplex inv = L[col][col].inverse();
    for (int r = col + 1; r < 9; ++r) {
      if (L[r][col].is_zero()) continue;
      ExactComplex f = L[r][col] * inv;
      for (int c = col; c < 9; ++c) L[r][c] = L[r][c] - f * L[col][c];
    }
  }
  return det;
}

inline ExactComplex lambda_det(const SL3Pair& p) { return lambda_det(lambda_matrix(p)); }

// ------------------------------------------------------------------
// Float-path families (these need the cube root of 4).
// ------------------------------------------------------------------

// One-parameter branching-locus family that is not singular:
//   A = diag(a, a, 1/a²),  B = (c/4)^{1/3} · [[1,1,−1],[1,−1,1],[−1/c,−1/c,−1/c]].
// Defined for a³ ≠ 1 and c ≠ 0; exactly two Jacobian values are nonzero,
//   at t(1): −(−1+a³)³/(4a⁴)   and   at t(-1): (−1+a³)³/(4a⁵).
struct BranchingFamily {
  ApproxMat3 A, B;
};

inline BranchingFamily branching_family(std::complex<double> a, std::complex<double> c) {
  if (std::abs(c) == 0.0) throw std::domain_error("branching_family: c must be nonzero");
  if (std::abs(a * a * a - 1.0) < 1e-12)
    throw std::domain_error("branching_family: a^3 = 1 degenerates the family");
  ApproxMat3 A = ApproxMat3::diag(a, a, 1.0 / (a * a));
  std::complex<double> s = std::pow(c / 4.0, 1.0 / 3.0);
  ApproxMat3 B;
  B.at(0, 0) = s;
  B.at(0, 1) = s;
  B.at(0, 2) = -s;
  B.at(1, 0) = s;
  B.at(1, 1) = -s;
  B.at(1, 2) = s;
  B.at(2, 0) = -s / c;
  B.at(2, 1) = -s / c;
  B.at(2, 2) = -s / c;
  return {A, B};
}

// the closed-form nonzero Jacobian values of the family, for cross-checking
inline std::pair<std::complex<double>, std::complex<double>> branching_family_partials(
    std::complex<double> a) {
  std::complex<double> u = a * a * a - 1.0;
  std::complex<double> u3 = u * u * u;
  std::complex<double> a4 = a * a * a * a;
  return {-u3 / (4.0 * a4), u3 / (4.0 * a4 * a)};
}

// Two representations sharing all eight base coordinates but with different
// t(5): the diagonal part is diag(2, 3, 1/6), the companions are the two
// 4^(−1/3)-scaled sign patterns below.
struct DistinguishingPair {
  ApproxMat3 A1, B1, A2, B2;
  ApproxCharPoint rho1, rho2;
};

inline DistinguishingPair distinguishing_pair() {
  double c4 = std::pow(4.0, -1.0 / 3.0);
  ApproxMat3 A = ApproxMat3::diag(2.0, 3.0, 1.0 / 6.0);
  auto fill = [&](std::array<double, 9> sign) {
    ApproxMat3 m;
    for (int i = 0; i < 9; ++i) m.e[i] = c4 * sign[i];
    return m;
  };
  ApproxMat3 B1 = fill({1, 1, -1, 1, -1, 1, -1, -1, -1});
  ApproxMat3 B2 = fill({1, -1, 1, -1, -1, -1, 1, 1, -1});
  DistinguishingPair d{A, B1, A, B2, {}, {}};
  d.rho1 = chi(d.A1, d.B1);
  d.rho2 = chi(d.A2, d.B2);
  return d;
}

}  // namespace sl3cv
