#pragma once

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sl3cv {

// One run of a generator: gen ∈ {1, 2}, exp ≠ 0.
struct Letter {
  int gen;
  long exp;
  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

// Freely reduced word in the rank-2 free group.  Adjacent letters always have
// distinct generators; reduction happens eagerly on every append, so an
// unreduced Word never exists.
class Word {
 public:
  Word() = default;
  explicit Word(const std::vector<Letter>& raw) {
    for (const Letter& l : raw) append(l);
  }

  static Word letter(int gen, long exp) {
    Word w;
    w.append({gen, exp});
    return w;
  }

  const std::vector<Letter>& letters() const { return ls_; }
  bool empty() const { return ls_.empty(); }
  std::size_t size() const { return ls_.size(); }
  const Letter& front() const { return ls_.front(); }
  const Letter& back() const { return ls_.back(); }

  // append with free reduction at the seam
  void append(Letter l) {
    if (l.gen != 1 && l.gen != 2) throw std::invalid_argument("bad generator index");
    if (l.exp == 0) return;
    if (!ls_.empty() && ls_.back().gen == l.gen) {
      ls_.back().exp += l.exp;
      if (ls_.back().exp == 0) ls_.pop_back();
      return;
    }
    ls_.push_back(l);
  }

  void append(const Word& w) {
    for (const Letter& l : w.ls_) append(l);
  }

  friend Word operator*(const Word& a, const Word& b) {
    Word r = a;
    r.append(b);
    return r;
  }

  Word inverse() const {
    Word r;
    for (auto it = ls_.rbegin(); it != ls_.rend(); ++it) r.ls_.push_back({it->gen, -it->exp});
    return r;  // reversal of a reduced word is reduced
  }

  Word pow(long k) const {
    if (k < 0) return inverse().pow(-k);
    Word r;
    for (long i = 0; i < k; ++i) r.append(*this);
    return r;
  }

  // |w|: letters counted with multiplicity
  long length() const {
    long n = 0;
    for (const Letter& l : ls_) n += std::labs(l.exp);
    return n;
  }

  // |w|_w: positive letters count once, negative letters twice
  long weighted_length() const {
    long n = 0;
    for (const Letter& l : ls_) n += l.exp > 0 ? l.exp : -2 * l.exp;
    return n;
  }

  long net_exponent(int gen) const {
    long n = 0;
    for (const Letter& l : ls_)
      if (l.gen == gen) n += l.exp;
    return n;
  }

  long max_abs_exponent() const {
    long m = 0;
    for (const Letter& l : ls_) m = std::max(m, std::labs(l.exp));
    return m;
  }

  // expansion into ±1-exponent letters
  std::vector<Letter> atoms() const {
    std::vector<Letter> out;
    for (const Letter& l : ls_) {
      long s = l.exp > 0 ? 1 : -1;
      for (long i = 0; i < std::labs(l.exp); ++i) out.push_back({l.gen, s});
    }
    return out;
  }

  // w = conjugator · core · conjugator⁻¹ with core cyclically reduced.
  // Also merges a same-sign wrap (x·u·x → conj x, core u·x²), so the core's
  // first and last generators always differ once it has ≥ 2 letters.
  struct CyclicReduction;
  CyclicReduction cyclic_reduce() const;

  // Representative of the cyclic class: lexicographically least rotation of
  // the cyclically reduced core.  Used as a memo key for trace computations.
  Word cyclic_normal_form() const;

  // largest k with w = base^k as a plain word (k = 1 when not a proper power)
  struct PowerDecomposition;
  PowerDecomposition power_decomposition() const;

  // image under x₁ ↦ img1, x₂ ↦ img2
  Word substitute(const Word& img1, const Word& img2) const {
    Word r;
    for (const Letter& l : ls_) r.append((l.gen == 1 ? img1 : img2).pow(l.exp));
    return r;
  }

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

  // canonical printer: lowercase letters with signed exponents, '*'-separated;
  // identity prints as "1"
  std::string str() const {
    if (ls_.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < ls_.size(); ++i) {
      if (i) s += '*';
      s += ls_[i].gen == 1 ? 'a' : 'b';
      if (ls_[i].exp != 1) s += '^' + std::to_string(ls_[i].exp);
    }
    return s;
  }

  // Grammar: word := term (("*" | ws) term)* ; term := letter ("^" int)? ;
  // letter := "a" | "b" | "A" | "B".  "1" (alone) and the empty string denote
  // the identity.
  static Word parse(const std::string& text) {
    Word w;
    std::size_t i = 0, n = text.size();
    auto skip_ws = [&] { while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    skip_ws();
    if (i < n && text[i] == '1') {
      ++i;
      skip_ws();
      if (i != n) throw std::invalid_argument("word syntax: '1' must stand alone");
      return w;
    }
    bool want_term = false;  // set after an explicit '*'
    while (i < n) {
      char c = text[i];
      int gen;
      long sign;
      switch (c) {
        case 'a': gen = 1; sign = 1; break;
        case 'b': gen = 2; sign = 1; break;
        case 'A': gen = 1; sign = -1; break;
        case 'B': gen = 2; sign = -1; break;
        default:
          throw std::invalid_argument(std::string("word syntax: unknown symbol '") + c + "'");
      }
      ++i;
      long exp = 1;
      if (i < n && text[i] == '^') {
        ++i;
        std::size_t start = i;
        if (i < n && (text[i] == '-' || text[i] == '+')) ++i;
        while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == start || (i == start + 1 && !std::isdigit(static_cast<unsigned char>(text[start]))))
          throw std::invalid_argument("word syntax: malformed exponent");
        exp = std::stol(text.substr(start, i - start));
        if (exp == 0) throw std::invalid_argument("word syntax: zero exponent");
      }
      w.append({gen, sign * exp});
      want_term = false;
      skip_ws();
      if (i < n && text[i] == '*') {
        ++i;
        want_term = true;
        skip_ws();
      }
    }
    if (want_term) throw std::invalid_argument("word syntax: dangling '*'");
    return w;
  }

 private:
  std::vector<Letter> ls_;
};

struct Word::CyclicReduction {
  Word core;
  Word conjugator;
};

inline Word::CyclicReduction Word::cyclic_reduce() const {
  Word core = *this;
  Word conj;
  while (core.size() >= 2 && core.front().gen == core.back().gen) {
    Letter f = core.front();
    conj.append(f);
    core.ls_.erase(core.ls_.begin());
    core.ls_.back().exp += f.exp;
    if (core.ls_.back().exp == 0) core.ls_.pop_back();
  }
  return {core, conj};
}

inline Word Word::cyclic_normal_form() const {
  Word core = cyclic_reduce().core;
  if (core.size() <= 1) return core;
  const std::vector<Letter>& v = core.ls_;
  std::size_t n = v.size(), best = 0;
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const Letter &a = v[(i + k) % n], &b = v[(best + k) % n];
      if (a < b) { best = i; break; }
      if (b < a) break;
    }
  }
  Word out;
  for (std::size_t k = 0; k < n; ++k) out.ls_.push_back(v[(best + k) % n]);
  return out;
}

struct Word::PowerDecomposition {
  Word base;
  long count;
};

inline Word::PowerDecomposition Word::power_decomposition() const {
  std::vector<Letter> at = atoms();
  long n = static_cast<long>(at.size());
  for (long d = 1; d <= n / 2; ++d) {
    if (n % d != 0) continue;
    bool ok = true;
    for (long i = d; i < n && ok; ++i) ok = at[i] == at[i - d];
    if (ok) {
      Word base;
      for (long i = 0; i < d; ++i) base.append(at[i]);
      return {base, n / d};
    }
  }
  return {*this, 1};
}

}  // namespace sl3cv
