#pragma once

#include <initializer_list>
#include <utility>

#include "sl3cv/polynomial.hpp"

namespace sl3cv {

namespace detail {

struct PolyBuilder {
  Polynomial p;
  void term(long num, long den, std::initializer_list<std::pair<int, int>> vars) {
    Monomial m{};
    for (const auto& [tag, e] : vars) m[var_index(tag)] = e;
    mpq_class c(num, den);
    c.canonicalize();
    p.add_term(m, c);
  }
};

}  // namespace detail

// P = t(1)t(-1)t(2)t(-2) - t(1)t(2)t(-3) - t(-1)t(-2)t(3) - t(1)t(-2)t(-4)
//     - t(-1)t(2)t(4) + t(1)t(-1) + t(2)t(-2) + t(3)t(-3) + t(4)t(-4) - 3;
// tr(w) + tr(w⁻¹) for the commutator w = x₁x₂x₁⁻¹x₂⁻¹.
inline const Polynomial& polynomial_P() {
  static const Polynomial p = [] {
    detail::PolyBuilder b;
    b.term(1, 1, {{1, 1}, {-1, 1}, {2, 1}, {-2, 1}});
    b.term(1, 1, {{1, 1}, {-1, 1}});
    b.term(-1, 1, {{1, 1}, {2, 1}, {-3, 1}});
    b.term(-1, 1, {{1, 1}, {-2, 1}, {-4, 1}});
    b.term(-1, 1, {{-1, 1}, {2, 1}, {4, 1}});
    b.term(-1, 1, {{-1, 1}, {-2, 1}, {3, 1}});
    b.term(1, 1, {{2, 1}, {-2, 1}});
    b.term(1, 1, {{3, 1}, {-3, 1}});
    b.term(1, 1, {{4, 1}, {-4, 1}});
    b.term(-3, 1, {});
    return b.p;
  }();
  return p;
}

// Q = tr(w)·tr(w⁻¹) for the same commutator, as a polynomial in the first
// eight coordinates (73 terms, degree 6).
inline const Polynomial& polynomial_Q() {
  static const Polynomial q = [] {
    detail::PolyBuilder b;
    b.term(-1, 1, {{1, 3}, {2, 1}, {-2, 1}});
    b.term(1, 1, {{1, 3}});
    b.term(1, 1, {{1, 2}, {-1, 2}, {2, 1}, {-2, 1}});
    b.term(-1, 1, {{1, 2}, {-1, 1}, {2, 1}, {-3, 1}});
    b.term(-1, 1, {{1, 2}, {-1, 1}, {-2, 1}, {-4, 1}});
    b.term(1, 1, {{1, 2}, {2, 2}, {3, 1}});
    b.term(1, 1, {{1, 2}, {2, 1}, {4, 1}});
    b.term(1, 1, {{1, 2}, {-2, 2}, {4, 1}});
    b.term(1, 1, {{1, 2}, {-2, 1}, {3, 1}});
    b.term(1, 1, {{1, 2}, {-3, 1}, {-4, 1}});
    b.term(-1, 1, {{1, 1}, {-1, 2}, {2, 1}, {4, 1}});
    b.term(-1, 1, {{1, 1}, {-1, 2}, {-2, 1}, {3, 1}});
    b.term(-1, 1, {{1, 1}, {-1, 1}, {2, 3}});
    b.term(1, 1, {{1, 1}, {-1, 1}, {2, 2}, {-2, 2}});
    b.term(1, 1, {{1, 1}, {-1, 1}, {2, 1}, {-2, 1}});
    b.term(-1, 1, {{1, 1}, {-1, 1}, {2, 1}, {3, 1}, {-4, 1}});
    b.term(-1, 1, {{1, 1}, {-1, 1}, {-2, 3}});
    b.term(-1, 1, {{1, 1}, {-1, 1}, {-2, 1}, {-3, 1}, {4, 1}});
    b.term(1, 1, {{1, 1}, {-1, 1}, {3, 1}, {-3, 1}});
    b.term(1, 1, {{1, 1}, {-1, 1}, {4, 1}, {-4, 1}});
    b.term(-6, 1, {{1, 1}, {-1, 1}});
    b.term(-1, 1, {{1, 1}, {2, 2}, {-2, 1}, {-3, 1}});
    b.term(1, 1, {{1, 1}, {2, 2}, {-4, 1}});
    b.term(-1, 1, {{1, 1}, {2, 1}, {-2, 2}, {-4, 1}});
    b.term(-1, 1, {{1, 1}, {2, 1}, {-2, 1}, {3, 1}, {4, 1}});
    b.term(-2, 1, {{1, 1}, {2, 1}, {3, 2}});
    b.term(3, 1, {{1, 1}, {2, 1}, {-3, 1}});
    b.term(1, 1, {{1, 1}, {-2, 2}, {-3, 1}});
    b.term(-2, 1, {{1, 1}, {-2, 1}, {4, 2}});
    b.term(3, 1, {{1, 1}, {-2, 1}, {-4, 1}});
    b.term(-3, 1, {{1, 1}, {3, 1}, {4, 1}});
    b.term(1, 1, {{1, 1}, {3, 1}, {-4, 2}});
    b.term(1, 1, {{1, 1}, {-3, 2}, {4, 1}});
    b.term(-1, 1, {{-1, 3}, {2, 1}, {-2, 1}});
    b.term(1, 1, {{-1, 3}});
    b.term(1, 1, {{-1, 2}, {2, 2}, {-4, 1}});
    b.term(1, 1, {{-1, 2}, {2, 1}, {-3, 1}});
    b.term(1, 1, {{-1, 2}, {-2, 2}, {-3, 1}});
    b.term(1, 1, {{-1, 2}, {-2, 1}, {-4, 1}});
    b.term(1, 1, {{-1, 2}, {3, 1}, {4, 1}});
    b.term(-1, 1, {{-1, 1}, {2, 2}, {-2, 1}, {4, 1}});
    b.term(1, 1, {{-1, 1}, {2, 2}, {3, 1}});
    b.term(-1, 1, {{-1, 1}, {2, 1}, {-2, 2}, {3, 1}});
    b.term(-1, 1, {{-1, 1}, {2, 1}, {-2, 1}, {-3, 1}, {-4, 1}});
    b.term(3, 1, {{-1, 1}, {2, 1}, {4, 1}});
    b.term(-2, 1, {{-1, 1}, {2, 1}, {-4, 2}});
    b.term(1, 1, {{-1, 1}, {-2, 2}, {4, 1}});
    b.term(3, 1, {{-1, 1}, {-2, 1}, {3, 1}});
    b.term(-2, 1, {{-1, 1}, {-2, 1}, {-3, 2}});
    b.term(1, 1, {{-1, 1}, {3, 2}, {-4, 1}});
    b.term(1, 1, {{-1, 1}, {-3, 1}, {4, 2}});
    b.term(-3, 1, {{-1, 1}, {-3, 1}, {-4, 1}});
    b.term(1, 1, {{2, 3}});
    b.term(1, 1, {{2, 2}, {-3, 1}, {4, 1}});
    b.term(1, 1, {{2, 1}, {-2, 1}, {3, 1}, {-3, 1}});
    b.term(1, 1, {{2, 1}, {-2, 1}, {4, 1}, {-4, 1}});
    b.term(-6, 1, {{2, 1}, {-2, 1}});
    b.term(1, 1, {{2, 1}, {3, 1}, {4, 2}});
    b.term(-3, 1, {{2, 1}, {3, 1}, {-4, 1}});
    b.term(1, 1, {{2, 1}, {-3, 2}, {-4, 1}});
    b.term(1, 1, {{-2, 3}});
    b.term(1, 1, {{-2, 2}, {3, 1}, {-4, 1}});
    b.term(1, 1, {{-2, 1}, {3, 2}, {4, 1}});
    b.term(-3, 1, {{-2, 1}, {-3, 1}, {4, 1}});
    b.term(1, 1, {{-2, 1}, {-3, 1}, {-4, 2}});
    b.term(1, 1, {{3, 3}});
    b.term(1, 1, {{3, 1}, {-3, 1}, {4, 1}, {-4, 1}});
    b.term(-6, 1, {{3, 1}, {-3, 1}});
    b.term(1, 1, {{-3, 3}});
    b.term(1, 1, {{4, 3}});
    b.term(-6, 1, {{4, 1}, {-4, 1}});
    b.term(1, 1, {{-4, 3}});
    b.term(9, 1, {});
    return b.p;
  }();
  return q;
}

// t(5)² - P·t(5) + Q in the free ring — the defining equation of the variety
// as a hypersurface in ℂ⁹
inline const Polynomial& surface_polynomial_free() {
  static const Polynomial s = [] {
    Polynomial t5 = Polynomial::variable(5);
    return t5 * t5 - polynomial_P() * t5 + polynomial_Q();
  }();
  return s;
}

namespace detail {

// rewrite t(5)^k for k ≥ 2 via t(5)² = P·t(5) - Q until the t(5)-degree
// drops below 2
inline Polynomial reduce_t5(Polynomial p) {
  for (;;) {
    int d = p.degree_in(5);
    if (d <= 1) return p;
    Polynomial top;  // coefficient of t(5)^d (a polynomial in the other vars)
    for (const auto& [m, c] : p.terms()) {
      if (m[8] != d) continue;
      Monomial stripped = m;
      stripped[8] = 0;
      top.add_term(stripped, c);
    }
    Polynomial t5d;  // t(5)^d
    {
      Monomial m{};
      m[8] = d;
      t5d.add_term(m, 1);
    }
    Polynomial t5dm2;  // t(5)^(d-2)
    {
      Monomial m{};
      m[8] = d - 2;
      t5dm2.add_term(m, 1);
    }
    Polynomial t5 = Polynomial::variable(5);
    p = (p - top * t5d) + top * t5dm2 * (polynomial_P() * t5 - polynomial_Q());
  }
}

}  // namespace detail

// Element of the coordinate ring ℂ[t(1),...,t(4),t(-4)][t(5)] / (t(5)² -
// P·t(5) + Q), kept in the canonical normal form with t(5)-degree ≤ 1.
class CoordPolynomial {
 public:
  CoordPolynomial() = default;
  CoordPolynomial(Polynomial p) : p_(detail::reduce_t5(std::move(p))) {}  // NOLINT
  CoordPolynomial(long n) : CoordPolynomial(Polynomial::constant(n)) {}   // NOLINT
  CoordPolynomial(const mpq_class& c) : CoordPolynomial(Polynomial::constant(c)) {}  // NOLINT

  static CoordPolynomial variable(int tag) { return CoordPolynomial(Polynomial::variable(tag)); }

  // the normal-form free-ring representative
  const Polynomial& rep() const { return p_; }
  bool is_zero() const { return p_.is_zero(); }

  friend CoordPolynomial operator+(const CoordPolynomial& a, const CoordPolynomial& b) {
    return CoordPolynomial(a.p_ + b.p_);
  }
  friend CoordPolynomial operator-(const CoordPolynomial& a, const CoordPolynomial& b) {
    return CoordPolynomial(a.p_ - b.p_);
  }
  friend CoordPolynomial operator-(const CoordPolynomial& a) { return CoordPolynomial(-a.p_); }
  friend CoordPolynomial operator*(const CoordPolynomial& a, const CoordPolynomial& b) {
    return CoordPolynomial(a.p_ * b.p_);
  }
  friend CoordPolynomial operator*(const mpq_class& c, const CoordPolynomial& a) {
    return CoordPolynomial(c * a.p_);
  }
  CoordPolynomial& operator+=(const CoordPolynomial& o) { return *this = *this + o; }
  CoordPolynomial& operator-=(const CoordPolynomial& o) { return *this = *this - o; }
  CoordPolynomial& operator*=(const CoordPolynomial& o) { return *this = *this * o; }

  friend bool operator==(const CoordPolynomial&, const CoordPolynomial&) = default;

  // formal partial of the degree-≤1 representative
  CoordPolynomial partial(int tag) const { return CoordPolynomial(p_.partial(tag)); }

  template <typename T>
  T eval(const std::array<T, 9>& x) const {
    return p_.eval(x);
  }

  int total_degree() const { return p_.total_degree(); }
  std::optional<Bigrade> bigrade() const { return p_.bigrade(); }
  std::string str() const { return p_.str(); }

  static CoordPolynomial parse(const std::string& text) {
    return CoordPolynomial(Polynomial::parse(text));
  }

 private:
  Polynomial p_;  // invariant: degree in t(5) is at most 1
};

inline CoordPolynomial operator*(const CoordPolynomial& a, const mpq_class& c) { return c * a; }

inline const CoordPolynomial& coord_P() {
  static const CoordPolynomial p{polynomial_P()};
  return p;
}

inline const CoordPolynomial& coord_Q() {
  static const CoordPolynomial q{polynomial_Q()};
  return q;
}

}  // namespace sl3cv
