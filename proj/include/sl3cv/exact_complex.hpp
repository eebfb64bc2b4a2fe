#pragma once

#include <gmpxx.h>

#include <complex>
#include <ostream>
#include <stdexcept>
#include <string>

namespace sl3cv {

// Gaussian rational a + b*i.  gmpxx keeps each part in lowest terms with a
// positive denominator, which is exactly the representation invariant we need.
struct ExactComplex {
  mpq_class re, im;

  ExactComplex() : re(0), im(0) {}
  ExactComplex(long n) : re(n), im(0) {}           // NOLINT: implicit by design
  ExactComplex(mpq_class r) : re(std::move(r)), im(0) {}
  ExactComplex(mpq_class r, mpq_class i) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }

  ExactComplex conj() const { return {re, -im}; }

  // |z|^2, a rational.
  mpq_class norm() const { return re * re + im * im; }

  ExactComplex inverse() const {
    if (is_zero()) throw std::domain_error("ExactComplex: division by zero");
    mpq_class n = norm();
    return {re / n, -im / n};
  }

  std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }

  friend ExactComplex operator+(const ExactComplex& a, const ExactComplex& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend ExactComplex operator-(const ExactComplex& a, const ExactComplex& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend ExactComplex operator-(const ExactComplex& a) { return {-a.re, -a.im}; }
  friend ExactComplex operator*(const ExactComplex& a, const ExactComplex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend ExactComplex operator/(const ExactComplex& a, const ExactComplex& b) {
    return a * b.inverse();
  }
  ExactComplex& operator+=(const ExactComplex& o) { re += o.re; im += o.im; return *this; }
  ExactComplex& operator-=(const ExactComplex& o) { re -= o.re; im -= o.im; return *this; }
  ExactComplex& operator*=(const ExactComplex& o) { *this = *this * o; return *this; }

  friend bool operator==(const ExactComplex& a, const ExactComplex& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const ExactComplex& a, const ExactComplex& b) { return !(a == b); }
};

namespace detail {

inline std::string rational_to_string(const mpq_class& q) {
  return q.get_str();  // "p" or "p/q", canonical
}

inline mpq_class parse_rational(std::string s) {
  if (!s.empty() && s.front() == '+') s.erase(0, 1);  // mpq_set_str rejects a leading '+'
  if (s.empty()) throw std::invalid_argument("empty rational");
  mpq_class q;
  if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
    throw std::invalid_argument("bad rational: '" + s + "'");
  if (mpz_sgn(mpq_denref(q.get_mpq_t())) == 0)
    throw std::invalid_argument("zero denominator: '" + s + "'");
  q.canonicalize();
  return q;
}

}  // namespace detail

// Canonical text form: "p/q" when real, otherwise "p/q+r/si" / "p/q-r/si";
// integer parts drop the "/1".
inline std::string to_string(const ExactComplex& z) {
  if (z.im == 0) return detail::rational_to_string(z.re);
  std::string s = detail::rational_to_string(z.re);
  s += (z.im > 0) ? "+" : "-";
  s += detail::rational_to_string(abs(z.im));
  s += 'i';
  return s;
}

inline std::ostream& operator<<(std::ostream& os, const ExactComplex& z) {
  return os << to_string(z);
}

// Accepts "p/q", "p/q+r/si", "p/q-r/si", pure-imaginary "r/si", and the
// shorthands "i", "-i", "+i" for unit imaginary parts.
inline ExactComplex parse_exact_complex(std::string s) {
  // strip spaces
  std::string t;
  for (char c : s)
    if (c != ' ' && c != '\t') t += c;
  if (t.empty()) throw std::invalid_argument("empty complex literal");
  if (t.back() != 'i') return {detail::parse_rational(t)};
  t.pop_back();  // drop 'i'
  // find the sign separating the real and imaginary parts (not at index 0)
  std::size_t split = std::string::npos;
  for (std::size_t k = 1; k < t.size(); ++k)
    if (t[k] == '+' || t[k] == '-') split = k;  // last sign: parts carry no inner signs
  if (split == std::string::npos) {
    // pure imaginary
    if (t.empty() || t == "+" ) return {0, 1};
    if (t == "-") return {0, -1};
    return {0, detail::parse_rational(t)};
  }
  mpq_class re = detail::parse_rational(t.substr(0, split));
  std::string ims = t.substr(split);
  mpq_class im = (ims == "+") ? mpq_class(1) : (ims == "-") ? mpq_class(-1)
                                             : detail::parse_rational(ims);
  return {re, im};
}

}  // namespace sl3cv
