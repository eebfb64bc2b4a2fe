#pragma once

#include <array>
#include <cctype>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "sl3cv/exact_complex.hpp"

namespace sl3cv {

// Trace coordinate tags in canonical order: t(1), t(-1), t(2), t(-2), t(3),
// t(-3), t(4), t(-4), t(5).  t(-5) is never a variable (it is P - t(5)).
inline constexpr std::array<int, 9> kVarTags = {1, -1, 2, -2, 3, -3, 4, -4, 5};

inline int var_index(int tag) {
  switch (tag) {
    case 1: return 0;
    case -1: return 1;
    case 2: return 2;
    case -2: return 3;
    case 3: return 4;
    case -3: return 5;
    case 4: return 6;
    case -4: return 7;
    case 5: return 8;
    default: throw std::invalid_argument("bad coordinate tag " + std::to_string(tag));
  }
}

struct Bigrade {
  int g1, g2;  // each mod 3
  friend bool operator==(const Bigrade&, const Bigrade&) = default;
  friend Bigrade operator+(const Bigrade& a, const Bigrade& b) {
    return {(a.g1 + b.g1) % 3, (a.g2 + b.g2) % 3};
  }
};

// per-variable ℤ₃×ℤ₃ grade: net exponent of each generator in the defining
// word, mod 3
inline Bigrade var_bigrade(int tag) {
  switch (tag) {
    case 1: return {1, 0};
    case -1: return {2, 0};
    case 2: return {0, 1};
    case -2: return {0, 2};
    case 3: return {1, 1};
    case -3: return {2, 2};
    case 4: return {1, 2};
    case -4: return {2, 1};
    case 5: return {0, 0};
    default: throw std::invalid_argument("bad coordinate tag");
  }
}

using Monomial = std::array<int, 9>;

inline int monomial_degree(const Monomial& m) {
  int d = 0;
  for (int e : m) d += e;
  return d;
}

inline Bigrade monomial_bigrade(const Monomial& m) {
  Bigrade g{0, 0};
  for (int i = 0; i < 9; ++i) {
    Bigrade v = var_bigrade(kVarTags[i]);
    g.g1 = (g.g1 + v.g1 * m[i]) % 3;
    g.g2 = (g.g2 + v.g2 * m[i]) % 3;
  }
  return g;
}

// Graded lexicographic, leading (printed-first) terms compare "true": higher
// total degree first, ties broken by larger exponent on the earliest variable
// in the t(1) < t(-1) < ... < t(5) listing.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const {
    int da = monomial_degree(a), db = monomial_degree(b);
    if (da != db) return da > db;
    for (int i = 0; i < 9; ++i)
      if (a[i] != b[i]) return a[i] > b[i];
    return false;
  }
};

namespace detail {

template <typename T>
T scalar_from_rational(const mpq_class& q);

template <>
inline ExactComplex scalar_from_rational<ExactComplex>(const mpq_class& q) {
  return ExactComplex(q);
}

template <>
inline std::complex<double> scalar_from_rational<std::complex<double>>(const mpq_class& q) {
  return {q.get_d(), 0.0};
}

}  // namespace detail

// Sparse commutative polynomial over ℚ in the nine trace coordinates — the
// free ring, no relation imposed.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, mpq_class, MonomialOrder>;

  Polynomial() = default;

  static Polynomial constant(const mpq_class& c) {
    Polynomial p;
    p.add_term(Monomial{}, c);
    return p;
  }
  static Polynomial variable(int tag) {
    Monomial m{};
    m[var_index(tag)] = 1;
    Polynomial p;
    p.add_term(m, 1);
    return p;
  }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Monomial& m, const mpq_class& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(m, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  mpq_class coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? mpq_class(0) : it->second;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    Polynomial r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, c);
    return r;
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    Polynomial r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
    return r;
  }
  friend Polynomial operator-(const Polynomial& a) {
    Polynomial r;
    for (const auto& [m, c] : a.terms_) r.terms_.emplace(m, -c);
    return r;
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial r;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) {
        Monomial m;
        for (int i = 0; i < 9; ++i) m[i] = ma[i] + mb[i];
        r.add_term(m, ca * cb);
      }
    return r;
  }
  friend Polynomial operator*(const mpq_class& c, const Polynomial& a) {
    Polynomial r;
    if (c == 0) return r;
    for (const auto& [m, k] : a.terms_) r.terms_.emplace(m, c * k);
    return r;
  }
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial pow(int k) const {
    Polynomial r = constant(1);
    for (int i = 0; i < k; ++i) r = r * *this;
    return r;
  }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  Polynomial partial(int tag) const {
    int idx = var_index(tag);
    Polynomial r;
    for (const auto& [m, c] : terms_) {
      if (m[idx] == 0) continue;
      Monomial d = m;
      d[idx] -= 1;
      r.add_term(d, c * m[idx]);
    }
    return r;
  }

  template <typename T>
  T eval(const std::array<T, 9>& x) const {
    T total(0);
    for (const auto& [m, c] : terms_) {
      T v = detail::scalar_from_rational<T>(c);
      for (int i = 0; i < 9; ++i)
        for (int e = 0; e < m[i]; ++e) v = v * x[i];
      total += v;
    }
    return total;
  }

  // simultaneous substitution of polynomials for all nine variables
  Polynomial substitute(const std::array<Polynomial, 9>& images) const {
    Polynomial total;
    for (const auto& [m, c] : terms_) {
      Polynomial v = constant(c);
      for (int i = 0; i < 9; ++i)
        for (int e = 0; e < m[i]; ++e) v = v * images[i];
      total += v;
    }
    return total;
  }

  int total_degree() const {  // 0 for the zero polynomial, by convention
    return terms_.empty() ? 0 : monomial_degree(terms_.begin()->first);
  }

  int degree_in(int tag) const {
    int idx = var_index(tag), d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m[idx]);
    return d;
  }

  // (0,0) for the zero polynomial; nullopt when inhomogeneous
  std::optional<Bigrade> bigrade() const {
    if (terms_.empty()) return Bigrade{0, 0};
    Bigrade g = monomial_bigrade(terms_.begin()->first);
    for (const auto& [m, c] : terms_)
      if (!(monomial_bigrade(m) == g)) return std::nullopt;
    return g;
  }

  // Signed-sum text form, e.g. "t(1)^3 - 3*t(1)*t(-1) + 3".
  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      mpq_class a = abs(c);
      if (first) {
        if (c < 0) out += '-';
        first = false;
      } else {
        out += c < 0 ? " - " : " + ";
      }
      bool has_vars = monomial_degree(m) > 0;
      if (!has_vars || a != 1) {
        out += a.get_str();
        if (has_vars) out += '*';
      }
      bool started = false;
      for (int i = 0; i < 9; ++i) {
        if (m[i] == 0) continue;
        if (started) out += '*';
        started = true;
        out += "t(" + std::to_string(kVarTags[i]) + ")";
        if (m[i] > 1) out += '^' + std::to_string(m[i]);
      }
    }
    return out;
  }

  static Polynomial parse(const std::string& text);

 private:
  TermMap terms_;
};

inline Polynomial operator*(const Polynomial& a, const mpq_class& c) { return c * a; }

namespace detail {

struct PolyParser {
  const std::string& s;
  std::size_t i = 0;

  explicit PolyParser(const std::string& text) : s(text) {}

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("polynomial syntax: " + why + " at position " + std::to_string(i));
  }

  mpq_class number() {
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start) fail("expected number");
    if (i < s.size() && s[i] == '/') {
      ++i;
      std::size_t d = i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      if (i == d) fail("expected denominator");
    }
    return parse_rational(s.substr(start, i - start));
  }

  int integer() {
    std::size_t start = i;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    std::size_t d = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == d) fail("expected integer");
    return std::stoi(s.substr(start, i - start));
  }

  // factor := rational | "t(" int ")" ["^" int]
  void factor(mpq_class& coeff, Monomial& m) {
    skip_ws();
    if (i < s.size() && s[i] == 't') {
      ++i;
      skip_ws();
      if (i >= s.size() || s[i] != '(') fail("expected '('");
      ++i;
      skip_ws();
      int tag = integer();
      skip_ws();
      if (i >= s.size() || s[i] != ')') fail("expected ')'");
      ++i;
      int e = 1;
      skip_ws();
      if (i < s.size() && s[i] == '^') {
        ++i;
        skip_ws();
        e = integer();
        if (e < 0) fail("negative exponent");
      }
      m[var_index(tag)] += e;
    } else {
      coeff *= number();
    }
  }

  Polynomial run() {
    Polynomial p;
    skip_ws();
    if (i == s.size()) fail("empty input");
    bool first = true;
    while (i < s.size()) {
      int sign = 1;
      skip_ws();
      if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        sign = s[i] == '-' ? -1 : 1;
        ++i;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      mpq_class coeff = sign;
      Monomial m{};
      factor(coeff, m);
      skip_ws();
      while (i < s.size() && s[i] == '*') {
        ++i;
        factor(coeff, m);
        skip_ws();
      }
      p.add_term(m, coeff);
    }
    return p;
  }
};

}  // namespace detail

inline Polynomial Polynomial::parse(const std::string& text) {
  if (text == "0") return Polynomial();
  return detail::PolyParser(text).run();
}

}  // namespace sl3cv
