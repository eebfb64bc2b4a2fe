#pragma once

#include <cstdint>
#include <cstdlib>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sl3cv/coord_poly.hpp"
#include "sl3cv/matrix3.hpp"
#include "sl3cv/rng.hpp"
#include "sl3cv/sampling.hpp"
#include "sl3cv/word.hpp"

namespace sl3cv {

// ------------------------------------------------------------------
// FormalElement: finite CoordPolynomial-weighted sum of noncommutative words
// over the two generators and their inverses (the identity word allowed).
// ------------------------------------------------------------------
class FormalElement {
 public:
  using TermMap = std::map<Word, CoordPolynomial>;

  FormalElement() = default;

  static FormalElement from_word(const Word& w) {
    FormalElement e;
    e.add(w, CoordPolynomial(1));
    return e;
  }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const Word& w, const CoordPolynomial& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(w, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  friend FormalElement operator+(const FormalElement& a, const FormalElement& b) {
    FormalElement r = a;
    for (const auto& [w, c] : b.terms_) r.add(w, c);
    return r;
  }
  friend FormalElement operator-(const FormalElement& a, const FormalElement& b) {
    FormalElement r = a;
    for (const auto& [w, c] : b.terms_) r.add(w, -c);
    return r;
  }
  friend FormalElement operator*(const CoordPolynomial& c, const FormalElement& a) {
    FormalElement r;
    for (const auto& [w, k] : a.terms_) r.add(w, c * k);
    return r;
  }
  friend FormalElement operator*(const FormalElement& a, const FormalElement& b) {
    FormalElement r;
    for (const auto& [wa, ca] : a.terms_)
      for (const auto& [wb, cb] : b.terms_) r.add(wa * wb, ca * cb);
    return r;
  }
  friend bool operator==(const FormalElement&, const FormalElement&) = default;

  // substitute a concrete pair: coefficients evaluate at the pair's trace
  // coordinates, words evaluate to matrix products
  ExactMat3 evaluate(const SL3Pair& p) const {
    std::array<ExactComplex, 9> pt = trace_coordinates(p.A, p.B);
    ExactMat3 total;
    for (const auto& [w, c] : terms_) total = total + c.eval(pt) * evaluate_word(w, p);
    return total;
  }

 private:
  TermMap terms_;
};

// ------------------------------------------------------------------
// Rewrite audit trail.  Each step records tr(before) = Σ coeff · poly ·
// Π tr(factor); replaying the log from the input word reproduces the output
// polynomial.
// ------------------------------------------------------------------
struct RewriteStep {
  std::string rule;  // cyclic | base | power | cpower | gather | memo
  Word before;
  struct Product {
    mpq_class coeff;
    std::vector<Word> factors;
    CoordPolynomial poly;
  };
  std::vector<Product> after;
};

struct RewriteTrace {
  std::vector<RewriteStep> steps;
};

struct RewriteBudgetError : std::runtime_error {
  long budget;
  explicit RewriteBudgetError(long b)
      : std::runtime_error("rewriting exceeded the step budget of " + std::to_string(b) +
                           " rule applications; this indicates an implementation bug, "
                           "rerun with tracing for the partial derivation"),
        budget(b) {}
};

// ------------------------------------------------------------------
// The reduction engine: tr(w) → CoordPolynomial.
//
// Strategy, in order, on the cyclic normal form of the word:
//   1. base table — identity, single ±1 letters, the four two-letter words,
//      and the two commutator classes (weighted length ≤ 6);
//   2. exponent reduction — tr(u xⁿ v) recursion for |n| ≥ 2, both signs;
//   3. composite powers — same recursion at the level of w = uᵏ;
//   4. gathering — the innermost-leftmost repeated-letter pair is merged via
//      the polarization expansion.
// Intermediate traces are reduced recursively with memoization keyed on the
// cyclic normal form.
// ------------------------------------------------------------------
class TraceRewriter {
 public:
  explicit TraceRewriter(long step_budget = 1000000) : budget_(step_budget) {}

  CoordPolynomial reduce(const Word& w, RewriteTrace* trace = nullptr) {
    if (depth_ == 0) steps_ = 0;
    ++depth_;
    try {
      CoordPolynomial r = reduce_cyclic(w, trace);
      --depth_;
      return r;
    } catch (...) {
      depth_ = 0;
      throw;
    }
  }

  long last_step_count() const { return steps_; }
  std::size_t memo_size() const { return memo_.size(); }

 private:
  std::map<Word, CoordPolynomial> memo_;
  long budget_;
  long steps_ = 0;
  int depth_ = 0;

  void bump() {
    if (++steps_ > budget_) throw RewriteBudgetError(budget_);
  }

  static const Word& comm_nf() {
    static const Word w = Word::parse("a*b*A*B").cyclic_normal_form();
    return w;
  }
  static const Word& comm_inv_nf() {
    static const Word w = Word::parse("b*a*B*A").cyclic_normal_form();
    return w;
  }

  CoordPolynomial reduce_cyclic(const Word& w, RewriteTrace* tr) {
    Word key = w.cyclic_normal_form();
    if (tr && !(key == w))
      tr->steps.push_back({"cyclic", w, {{1, {key}, CoordPolynomial(1)}}});
    auto it = memo_.find(key);
    if (it != memo_.end()) {
      if (tr) tr->steps.push_back({"memo", key, {{1, {}, it->second}}});
      return it->second;
    }
    CoordPolynomial val = expand(key, tr);
    memo_.emplace(std::move(key), val);
    return val;
  }

  CoordPolynomial log_base(RewriteTrace* tr, const Word& key, CoordPolynomial val) {
    if (tr) tr->steps.push_back({"base", key, {{1, {}, val}}});
    return val;
  }

  CoordPolynomial apply(RewriteTrace* tr, const char* rule, const Word& key,
                        const std::vector<RewriteStep::Product>& prods) {
    if (tr) tr->steps.push_back({rule, key, prods});
    CoordPolynomial val;
    for (const auto& pr : prods) {
      CoordPolynomial term = CoordPolynomial(Polynomial::constant(pr.coeff)) * pr.poly;
      for (const Word& f : pr.factors) term = term * reduce_cyclic(f, tr);
      val += term;
    }
    return val;
  }

  CoordPolynomial expand(const Word& key, RewriteTrace* tr) {
    bump();
    const auto& ls = key.letters();

    // --- base table ---
    if (ls.empty()) return log_base(tr, key, CoordPolynomial(3));  // tr(I) = 3
    if (ls.size() == 1 && std::labs(ls[0].exp) == 1) {
      int tag = ls[0].gen == 1 ? 1 : 2;
      if (ls[0].exp < 0) tag = -tag;
      return log_base(tr, key, CoordPolynomial::variable(tag));
    }
    if (ls.size() == 2 && key.max_abs_exponent() == 1) {
      // the normal form puts the generator-1 letter first
      int tag = ls[0].exp > 0 ? (ls[1].exp > 0 ? 3 : 4) : (ls[1].exp > 0 ? -4 : -3);
      return log_base(tr, key, CoordPolynomial::variable(tag));
    }
    if (key == comm_nf()) return log_base(tr, key, CoordPolynomial::variable(5));
    if (key == comm_inv_nf())
      return log_base(tr, key,
                      CoordPolynomial(polynomial_P()) - CoordPolynomial::variable(5));

    // --- exponent reduction ---
    if (key.max_abs_exponent() >= 2) return expand_power(key, tr);

    // --- composite powers ---
    auto pd = key.power_decomposition();
    if (pd.count >= 2) return expand_composite_power(key, pd.base, pd.count, tr);

    // --- gathering ---
    return expand_gather(key, tr);
  }

  // tr(u xⁿ v) = tr(x)·tr(u xⁿ⁻¹ v) − tr(x⁻¹)·tr(u xⁿ⁻² v) + tr(u xⁿ⁻³ v)
  // for n ≥ 2, mirrored through x ↦ x⁻¹ for n ≤ −2
  CoordPolynomial expand_power(const Word& key, RewriteTrace* tr) {
    const auto& ls = key.letters();
    std::size_t idx = 0;
    while (std::labs(ls[idx].exp) < 2) ++idx;
    Word u, v;
    for (std::size_t k = 0; k < idx; ++k) u.append(ls[k]);
    for (std::size_t k = idx + 1; k < ls.size(); ++k) v.append(ls[k]);
    int g = ls[idx].gen;
    long n = ls[idx].exp;
    Word xw = Word::letter(g, 1), xiw = Word::letter(g, -1);
    auto mid = [&](long e) { return u * Word::letter(g, e) * v; };
    std::vector<RewriteStep::Product> prods;
    if (n >= 2)
      prods = {{1, {xw, mid(n - 1)}, CoordPolynomial(1)},
               {-1, {xiw, mid(n - 2)}, CoordPolynomial(1)},
               {1, {mid(n - 3)}, CoordPolynomial(1)}};
    else
      prods = {{1, {xiw, mid(n + 1)}, CoordPolynomial(1)},
               {-1, {xw, mid(n + 2)}, CoordPolynomial(1)},
               {1, {mid(n + 3)}, CoordPolynomial(1)}};
    return apply(tr, "power", key, prods);
  }

  // same recursion one level up: tr(uᵏ) for the primitive root u of w = uᵏ
  CoordPolynomial expand_composite_power(const Word& key, const Word& u, long k,
                                         RewriteTrace* tr) {
    std::vector<RewriteStep::Product> prods = {
        {1, {u, u.pow(k - 1)}, CoordPolynomial(1)},
        {-1, {u.inverse(), u.pow(k - 2)}, CoordPolynomial(1)},
        {1, {u.pow(k - 3)}, CoordPolynomial(1)}};
    return apply(tr, "cpower", key, prods);
  }

  // tr(w₁ x w₂ x w₃) with a repeated ±1 letter x:
  //   −tr(w₁x²w₂w₃) − tr(w₁w₂x²w₃) + tr(w₂)tr(w₁x²w₃)
  //   + tr(x)[tr(w₁w₂xw₃) + tr(w₁xw₂w₃)]
  //   + [tr(xw₂) − tr(x)tr(w₂)]·tr(w₁xw₃)
  //   + [tr(w₂x²) − tr(x)tr(xw₂) + tr(x⁻¹)tr(w₂)]·tr(w₁w₃)
  //   − tr(x⁻¹)·tr(w₁w₂w₃)
  // (trace of the polarization expansion of the subword x w₂ x)
  CoordPolynomial expand_gather(const Word& key, RewriteTrace* tr) {
    const auto& ls = key.letters();
    std::size_t n = ls.size();
    std::size_t bi = n, bj = n;
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < j; ++i) {
        if (!(ls[i] == ls[j])) continue;
        if (bi == n || j - i < bj - bi || (j - i == bj - bi && i < bi)) {
          bi = i;
          bj = j;
        }
      }
    if (bi == n) throw std::logic_error("rewriting stuck: no rule applies to " + key.str());

    Word w1, w2, w3;
    for (std::size_t k = 0; k < bi; ++k) w1.append(ls[k]);
    for (std::size_t k = bi + 1; k < bj; ++k) w2.append(ls[k]);
    for (std::size_t k = bj + 1; k < n; ++k) w3.append(ls[k]);
    Word x = Word::letter(ls[bi].gen, ls[bi].exp);
    Word xi = Word::letter(ls[bi].gen, -ls[bi].exp);
    Word x2 = Word::letter(ls[bi].gen, 2 * ls[bi].exp);

    const CoordPolynomial one(1);
    std::vector<RewriteStep::Product> prods = {
        {-1, {w1 * x2 * w2 * w3}, one},
        {-1, {w1 * w2 * x2 * w3}, one},
        {1, {w2, w1 * x2 * w3}, one},
        {1, {x, w1 * w2 * x * w3}, one},
        {1, {x, w1 * x * w2 * w3}, one},
        {1, {x * w2, w1 * x * w3}, one},
        {-1, {x, w2, w1 * x * w3}, one},
        {1, {w2 * x2, w1 * w3}, one},
        {-1, {x, x * w2, w1 * w3}, one},
        {1, {xi, w2, w1 * w3}, one},
        {-1, {xi, w1 * w2 * w3}, one}};
    return apply(tr, "gather", key, prods);
  }
};

// the canonical trace polynomial of a word (fresh engine per call)
inline CoordPolynomial reduce_trace(const Word& w, RewriteTrace* trace = nullptr) {
  TraceRewriter rw;
  return rw.reduce(w, trace);
}

// ------------------------------------------------------------------
// Element-level rules.  These drive the same identities as the engine above
// but on FormalElements, and are cross-checked against exact evaluation.
// ------------------------------------------------------------------

// replace every letter of |exponent| ≥ 2 using x² = tr(x)·x − tr(x⁻¹)·I + x⁻¹
// (and the inverse-side analogue), until all exponents are ±1
inline FormalElement eliminate_powers(FormalElement e) {
  for (;;) {
    const Word* target = nullptr;
    for (const auto& [w, c] : e.terms())
      if (w.max_abs_exponent() >= 2) {
        target = &w;
        break;
      }
    if (!target) return e;
    Word w = *target;
    CoordPolynomial c = e.terms().at(w);
    e.add(w, -c);

    const auto& ls = w.letters();
    std::size_t idx = 0;
    while (std::labs(ls[idx].exp) < 2) ++idx;
    Word u, v;
    for (std::size_t k = 0; k < idx; ++k) u.append(ls[k]);
    for (std::size_t k = idx + 1; k < ls.size(); ++k) v.append(ls[k]);
    int g = ls[idx].gen;
    long n = ls[idx].exp;
    CoordPolynomial tp = CoordPolynomial::variable(g == 1 ? 1 : 2);
    CoordPolynomial tm = CoordPolynomial::variable(g == 1 ? -1 : -2);
    auto mid = [&](long ex) { return u * Word::letter(g, ex) * v; };
    if (n >= 2) {
      e.add(mid(n - 1), c * tp);
      e.add(mid(n - 2), -(c * tm));
      e.add(mid(n - 3), c);
    } else {
      e.add(mid(n + 1), c * tm);
      e.add(mid(n + 2), -(c * tp));
      e.add(mid(n + 3), c);
    }
  }
}

// replace separated repeated ±1 letters x·w₂·x by the polarization expansion
//   pol(x,w₂) − x²w₂ − w₂x²
// with pol(x,y) = tr(y)x² + tr(x)(yx + xy) + [tr(xy) − tr(x)tr(y)]x
//                 − tr(x⁻¹)y + [tr(yx²) − tr(x)tr(xy) + tr(x⁻¹)tr(y)]I,
// coefficient traces reduced through the supplied engine
inline FormalElement gather_repeats(FormalElement e, TraceRewriter& rw) {
  for (;;) {
    const Word* tw = nullptr;
    std::size_t bi = 0, bj = 0;
    for (const auto& [w, c] : e.terms()) {
      const auto& ls = w.letters();
      std::size_t n = ls.size(), fi = n, fj = n;
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < j; ++i) {
          if (!(ls[i] == ls[j]) || std::labs(ls[i].exp) != 1) continue;
          if (fi == n || j - i < fj - fi || (j - i == fj - fi && i < fi)) {
            fi = i;
            fj = j;
          }
        }
      if (fi != n) {
        tw = &w;
        bi = fi;
        bj = fj;
        break;
      }
    }
    if (!tw) return e;
    Word w = *tw;
    CoordPolynomial c = e.terms().at(w);
    e.add(w, -c);

    const auto& ls = w.letters();
    Word w1, w2, w3;
    for (std::size_t k = 0; k < bi; ++k) w1.append(ls[k]);
    for (std::size_t k = bi + 1; k < bj; ++k) w2.append(ls[k]);
    for (std::size_t k = bj + 1; k < ls.size(); ++k) w3.append(ls[k]);
    Word x = Word::letter(ls[bi].gen, ls[bi].exp);
    Word xi = Word::letter(ls[bi].gen, -ls[bi].exp);
    Word x2 = Word::letter(ls[bi].gen, 2 * ls[bi].exp);

    CoordPolynomial T = rw.reduce(x), Ti = rw.reduce(xi);
    CoordPolynomial Rw2 = rw.reduce(w2), Rxw2 = rw.reduce(x * w2), Rw2x2 = rw.reduce(w2 * x2);

    e.add(w1 * x2 * w2 * w3, -c);
    e.add(w1 * w2 * x2 * w3, -c);
    e.add(w1 * x2 * w3, c * Rw2);
    e.add(w1 * w2 * x * w3, c * T);
    e.add(w1 * x * w2 * w3, c * T);
    e.add(w1 * x * w3, c * (Rxw2 - T * Rw2));
    e.add(w1 * w2 * w3, -(c * Ti));
    e.add(w1 * w3, c * (Rw2x2 - T * Rxw2 + Ti * Rw2));
  }
}

// ------------------------------------------------------------------
// Identity suite: evaluates both sides of each defining matrix identity on
// random exact unimodular tuples and reports exact equality.
// ------------------------------------------------------------------
struct IdentityReport {
  struct Item {
    std::string name;
    int trials;
    int failures;
  };
  std::vector<Item> items;
  bool all_passed() const {
    for (const auto& it : items)
      if (it.failures != 0) return false;
    return true;
  }
};

namespace detail {

inline ExactMat3 pol_matrix(const ExactMat3& x, const ExactMat3& y) {
  return y * x * x + x * x * y + x * y * x;
}

inline ExactMat3 pol_trace_form(const ExactMat3& x, const ExactMat3& y) {
  const ExactMat3 I = ExactMat3::identity();
  ExactComplex half(mpq_class(1, 2));
  ExactMat3 x2 = x * x;
  return trace(y) * x2 + trace(x) * (y * x) + trace(x) * (x * y) - trace(x) * trace(y) * x +
         trace(x * y) * x + trace(y * x2) * I - trace(x) * trace(x * y) * I -
         half * (trace(x) * trace(x) * y - trace(x2) * y - trace(y) * trace(x) * trace(x) * I +
                 trace(y) * trace(x2) * I);
}

}  // namespace detail

inline IdentityReport identity_suite(std::uint64_t seed, int trials) {
  using detail::pol_matrix;
  using detail::pol_trace_form;
  const ExactMat3 I = ExactMat3::identity();
  const ExactMat3 Z{};
  ExactComplex half(mpq_class(1, 2)), third(mpq_class(1, 3)), sixth(mpq_class(1, 6));

  IdentityReport rep;
  int item_idx = 0;
  auto run = [&](const std::string& name, int per_trial_matrices,
                 auto&& check) {
    IdentityReport::Item item{name, trials, 0};
    for (int t = 0; t < trials; ++t) {
      std::vector<ExactMat3> ms;
      for (int k = 0; k < per_trial_matrices; ++k)
        ms.push_back(random_sl3(derive_seed(seed, 100 + item_idx, t * 16 + k), 4));
      if (!check(ms)) ++item.failures;
    }
    rep.items.push_back(std::move(item));
    ++item_idx;
  };

  run("cayley_hamilton", 1, [&](const std::vector<ExactMat3>& m) {
    const ExactMat3& x = m[0];
    return x * x * x - trace(x) * (x * x) + trace(adjugate(x)) * x - det(x) * I == Z;
  });
  run("adjugate_trace", 1, [&](const std::vector<ExactMat3>& m) {
    const ExactMat3& x = m[0];
    return trace(adjugate(x)) == half * (trace(x) * trace(x) - trace(x * x));
  });
  run("det_from_traces", 1, [&](const std::vector<ExactMat3>& m) {
    const ExactMat3& x = m[0];
    return det(x) == third * trace(x * x * x) + sixth * trace(x) * trace(x) * trace(x) -
                         half * trace(x) * trace(x * x);
  });
  run("shifted_cayley_hamilton", 2, [&](const std::vector<ExactMat3>& m) {
    for (long lam = 1; lam <= 3; ++lam) {
      ExactMat3 s = m[0] + ExactComplex(lam) * m[1];
      if (!(s * s * s - trace(s) * (s * s) + trace(adjugate(s)) * s - det(s) * I == Z))
        return false;
    }
    return true;
  });
  run("partial_polarization", 2, [&](const std::vector<ExactMat3>& m) {
    return pol_trace_form(m[0], m[1]) == pol_matrix(m[0], m[1]);
  });
  run("polarization_consistency", 3, [&](const std::vector<ExactMat3>& m) {
    const ExactMat3 &x = m[0], &y = m[1], &z = m[2];
    if (!(pol_matrix(x, x) == ExactComplex(3) * (x * x * x))) return false;
    return pol_trace_form(x, y + z) == pol_trace_form(x, y) + pol_trace_form(x, z);
  });
  run("full_polarization", 3, [&](const std::vector<ExactMat3>& m) {
    const ExactMat3 &x = m[0], &y = m[1], &z = m[2];
    ExactMat3 lhs = x * z * y + z * x * y + y * x * z + y * z * x + x * y * z + z * y * x;
    return lhs == pol_matrix(x + z, y) - pol_matrix(x, y) - pol_matrix(z, y);
  });
  run("ch_times_inverse", 2, [&](const std::vector<ExactMat3>& m) {
    const ExactMat3 &x = m[0], &y = m[1];
    ExactMat3 xi = adjugate(x);  // det 1
    return x * x * y - trace(x) * (x * y) + trace(xi) * y - xi * y == Z;
  });
  run("commutator_trace", 2, [&](const std::vector<ExactMat3>& m) {
    const ExactMat3 &x = m[0], &y = m[1];
    ExactMat3 xi = adjugate(x), yi = adjugate(y);
    ExactComplex lhs = trace(x * y * xi * yi);
    ExactComplex rhs = -trace(y * x * yi * xi) +
                       trace(x) * trace(xi) * trace(y) * trace(yi) + trace(x) * trace(xi) +
                       trace(y) * trace(yi) + trace(x * y) * trace(xi * yi) +
                       trace(x * yi) * trace(xi * y) - trace(xi) * trace(y) * trace(x * yi) -
                       trace(x) * trace(yi) * trace(xi * y) -
                       trace(x) * trace(y) * trace(xi * yi) -
                       trace(x * y) * trace(xi) * trace(yi) - ExactComplex(3);
    return lhs == rhs;
  });
  run("square_transfer_short", 3, [&](const std::vector<ExactMat3>& m) {
    const ExactMat3 &x = m[0], &y = m[1], &z = m[2];
    ExactMat3 lhs = x * x * z * y * y;
    ExactMat3 rhs = -(x * y * y * x) * z - (x * y * x) * z * y + x * pol_matrix(y, x * z);
    return lhs == rhs;
  });
  run("square_transfer_long", 3, [&](const std::vector<ExactMat3>& m) {
    const ExactMat3 &x = m[0], &y = m[1], &z = m[2];
    ExactMat3 x2 = x * x, y2 = y * y;
    ExactMat3 lhs = x2 * z * y2;
    ExactMat3 rhs = (y2 * x2 + x2 * y2 - pol_matrix(x, y2)) * z +
                    (y * x2 + x2 * y - pol_matrix(x, y)) * z * y + x * pol_matrix(y, x * z);
    return lhs == rhs;
  });
  run("square_transfer_symmetric", 3, [&](const std::vector<ExactMat3>& m) {
    const ExactMat3 &x = m[0], &y = m[1], &z = m[2];
    ExactMat3 x2 = x * x, y2 = y * y;
    ExactMat3 lhs = ExactComplex(3) * (x2 * z * y2);
    ExactMat3 rhs = pol_matrix(y, x2 * z) + x * pol_matrix(y, x * z) - pol_matrix(x, y2) * z -
                    pol_matrix(x, y) * z * y + x2 * pol_matrix(y, z);
    return lhs == rhs;
  });
  run("sixfold_product", 6, [&](const std::vector<ExactMat3>& m) {
    ExactMat3 R = m[0] * m[1], S = m[2] * m[3], T = m[4] * m[5];
    ExactMat3 lhs = R * T * S + T * R * S + S * R * T + S * T * R + R * S * T + T * S * R;
    return lhs == pol_matrix(R + T, S) - pol_matrix(R, S) - pol_matrix(T, S);
  });
  return rep;
}

}  // namespace sl3cv
