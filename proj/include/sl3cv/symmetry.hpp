#pragma once

#include <array>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sl3cv/coord_poly.hpp"
#include "sl3cv/rewrite.hpp"
#include "sl3cv/variety.hpp"
#include "sl3cv/word.hpp"

namespace sl3cv {

// ------------------------------------------------------------------
// Signed permutations of the eight base subscripts {±1, ±2, ±3, ±4}.
// ------------------------------------------------------------------
struct SignedPermutation {
  std::array<int, 8> img;  // image tag, indexed by var_index of the source tag

  static SignedPermutation identity() {
    SignedPermutation s;
    for (int i = 0; i < 8; ++i) s.img[i] = kVarTags[i];
    return s;
  }

  static SignedPermutation from_cycles(
      std::initializer_list<std::initializer_list<int>> cycles) {
    SignedPermutation s = identity();
    for (const auto& cyc : cycles) {
      std::vector<int> c(cyc);
      for (std::size_t k = 0; k < c.size(); ++k)
        s.img[var_index(c[k])] = c[(k + 1) % c.size()];
    }
    return s;
  }

  int operator()(int tag) const { return img[var_index(tag)]; }

  // (f ∘ g)(x) = f(g(x))
  friend SignedPermutation compose(const SignedPermutation& f, const SignedPermutation& g) {
    SignedPermutation r;
    for (int i = 0; i < 8; ++i) r.img[i] = f(g.img[i]);
    return r;
  }
  SignedPermutation inverse() const {
    SignedPermutation r;
    for (int i = 0; i < 8; ++i) r.img[var_index(img[i])] = kVarTags[i];
    return r;
  }
  friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;
};

// An element of the coordinate symmetry group 𝔇 ≅ D₄.  The parity flag is set
// on the elements of odd length in the two generators; those send t(5) to
// t(-5) = P − t(5).
struct DihedralElement {
  std::string name;  // id, i, t, it, ti, tit, iti, titi
  SignedPermutation perm;
  bool odd;

  friend bool operator==(const DihedralElement& a, const DihedralElement& b) {
    return a.perm == b.perm && a.odd == b.odd;
  }
};

// the eight elements, in the fixed row/column order of the group table
inline const std::vector<DihedralElement>& dihedral_group() {
  static const std::vector<DihedralElement> g = {
      {"id", SignedPermutation::identity(), false},
      {"i", SignedPermutation::from_cycles({{1, -1}, {3, -4}, {-3, 4}}), true},
      {"t", SignedPermutation::from_cycles({{1, 2}, {-1, -2}, {4, -4}}), true},
      {"it", SignedPermutation::from_cycles({{1, 2, -1, -2}, {3, -4, -3, 4}}), false},
      {"ti", SignedPermutation::from_cycles({{1, -2, -1, 2}, {3, 4, -3, -4}}), false},
      {"tit", SignedPermutation::from_cycles({{2, -2}, {3, 4}, {-3, -4}}), true},
      {"iti", SignedPermutation::from_cycles({{1, -2}, {2, -1}, {3, -3}}), true},
      {"titi", SignedPermutation::from_cycles({{1, -1}, {2, -2}, {3, -3}, {4, -4}}), false},
  };
  return g;
}

inline const DihedralElement& dihedral_element(const std::string& name) {
  for (const auto& g : dihedral_group())
    if (g.name == name) return g;
  throw std::invalid_argument("unknown dihedral element '" + name + "'");
}

// group product: a·b acts by b's subscript map first
inline const DihedralElement& compose(const DihedralElement& a, const DihedralElement& b) {
  SignedPermutation p = compose(a.perm, b.perm);
  bool odd = a.odd != b.odd;
  for (const auto& g : dihedral_group())
    if (g.perm == p && g.odd == odd) return g;
  throw std::logic_error("dihedral table is not closed");  // unreachable
}

inline const DihedralElement& dihedral_inverse(const DihedralElement& a) {
  for (const auto& g : dihedral_group())
    if (compose(a, g).name == "id") return g;
  throw std::logic_error("dihedral element has no inverse");  // unreachable
}

inline int element_order(const DihedralElement& a) {
  const DihedralElement* cur = &a;
  for (int n = 1; n <= 8; ++n) {
    if (cur->name == "id") return n;
    cur = &compose(*cur, a);
  }
  throw std::logic_error("element order exceeds group order");
}

// ------------------------------------------------------------------
// Actions.  On points the base coordinate at slot i moves to slot perm(i);
// on polynomials the variable t(i) is substituted by t(perm(i)).  Both are
// left actions for the table's product; odd elements exchange the two sheets.
// ------------------------------------------------------------------
template <typename T>
BasicCharPoint<T> act_on_point(const DihedralElement& g, const BasicCharPoint<T>& pt) {
  BasicCharPoint<T> out;
  for (int i = 0; i < 8; ++i) out.coord(g.perm.img[i]) = pt.t[i];
  out.t[8] = g.odd ? polynomial_P().eval(pt.t) - pt.t[8] : pt.t[8];
  return out;
}

inline Polynomial act_on_poly(const DihedralElement& g, const Polynomial& f) {
  std::array<Polynomial, 9> images;
  for (int i = 0; i < 8; ++i) images[i] = Polynomial::variable(g.perm.img[i]);
  images[8] = g.odd ? polynomial_P() - Polynomial::variable(5) : Polynomial::variable(5);
  return f.substitute(images);
}

inline CoordPolynomial act_on_poly(const DihedralElement& g, const CoordPolynomial& f) {
  return CoordPolynomial(act_on_poly(g, f.rep()));
}

// the group symmetrizer 𝕊 = Σ over all eight elements
inline Polynomial symmetrize(const Polynomial& f) {
  Polynomial s;
  for (const auto& g : dihedral_group()) s += act_on_poly(g, f);
  return s;
}

inline CoordPolynomial symmetrize(const CoordPolynomial& f) {
  return CoordPolynomial(symmetrize(f.rep()));
}

// ------------------------------------------------------------------
// The two seed polynomials whose symmetrizations recover P and Q:
//   𝕊(p) = P + 3,   𝕊(q) = Q − 9.
// ------------------------------------------------------------------
inline const Polynomial& seed_p() {
  static const Polynomial p = [] {
    detail::PolyBuilder b;
    b.term(1, 8, {{1, 1}, {-1, 1}, {2, 1}, {-2, 1}});
    b.term(1, 4, {{1, 1}, {-1, 1}});
    b.term(-1, 2, {{1, 1}, {-2, 1}, {-4, 1}});
    b.term(1, 4, {{3, 1}, {-3, 1}});
    return b.p;
  }();
  return p;
}

inline const Polynomial& seed_q() {
  static const Polynomial q = [] {
    detail::PolyBuilder b;
    b.term(-1, 2, {{1, 3}, {2, 1}, {-2, 1}});
    b.term(1, 2, {{1, 3}});
    b.term(1, 4, {{1, 2}, {-1, 2}, {2, 1}, {-2, 1}});
    b.term(-1, 1, {{1, 2}, {-1, 1}, {-2, 1}, {-4, 1}});
    b.term(1, 2, {{1, 2}, {2, 2}, {3, 1}});
    b.term(1, 8, {{1, 1}, {-1, 1}, {2, 1}, {-2, 1}});
    b.term(1, 2, {{1, 1}, {-1, 1}, {3, 1}, {-3, 1}});
    b.term(-3, 2, {{1, 1}, {-1, 1}});
    b.term(1, 1, {{1, 1}, {2, 2}, {-4, 1}});
    b.term(-1, 2, {{1, 1}, {2, 1}, {-2, 1}, {3, 1}, {4, 1}});
    b.term(-1, 1, {{1, 1}, {2, 1}, {3, 2}});
    b.term(3, 2, {{1, 1}, {-2, 1}, {-4, 1}});
    b.term(1, 1, {{1, 1}, {3, 1}, {-4, 2}});
    b.term(1, 2, {{2, 2}, {-3, 1}, {4, 1}});
    b.term(-3, 2, {{2, 1}, {3, 1}, {-4, 1}});
    b.term(1, 2, {{3, 3}});
    b.term(1, 8, {{3, 1}, {-3, 1}, {4, 1}, {-4, 1}});
    b.term(-3, 2, {{3, 1}, {-3, 1}});
    return b.p;
  }();
  return q;
}

// ------------------------------------------------------------------
// Structure verification against the frozen 8×8 table.
// ------------------------------------------------------------------
struct GroupReport {
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

inline const std::array<std::array<const char*, 8>, 8>& expected_cayley_table() {
  static const std::array<std::array<const char*, 8>, 8> t = {{
      {"id", "i", "t", "it", "ti", "tit", "iti", "titi"},
      {"i", "id", "it", "t", "iti", "titi", "ti", "tit"},
      {"t", "ti", "id", "tit", "i", "it", "titi", "iti"},
      {"it", "iti", "i", "titi", "id", "t", "tit", "ti"},
      {"ti", "t", "tit", "id", "titi", "iti", "i", "it"},
      {"tit", "titi", "ti", "iti", "t", "id", "it", "i"},
      {"iti", "it", "titi", "i", "tit", "ti", "id", "t"},
      {"titi", "tit", "iti", "ti", "it", "i", "t", "id"},
  }};
  return t;
}

inline GroupReport verify_group_structure() {
  GroupReport rep;
  const auto& G = dihedral_group();

  for (std::size_t i = 0; i < G.size(); ++i)
    for (std::size_t j = i + 1; j < G.size(); ++j)
      if (G[i].perm == G[j].perm)
        rep.failures.push_back("elements " + G[i].name + " and " + G[j].name +
                               " share a permutation");

  const auto& expect = expected_cayley_table();
  for (std::size_t r = 0; r < 8; ++r)
    for (std::size_t c = 0; c < 8; ++c) {
      const std::string& got = compose(G[r], G[c]).name;
      if (got != expect[r][c])
        rep.failures.push_back("table entry (" + G[r].name + ", " + G[c].name + ") is " +
                               got + ", expected " + expect[r][c]);
    }

  if (element_order(dihedral_element("i")) != 2) rep.failures.push_back("order of i is not 2");
  if (element_order(dihedral_element("t")) != 2) rep.failures.push_back("order of t is not 2");
  if (element_order(dihedral_element("ti")) != 4)
    rep.failures.push_back("order of ti is not 4");

  // the dihedral relation b·a = a⁻¹·b with a = ti, b = i
  {
    const DihedralElement &a = dihedral_element("ti"), &b = dihedral_element("i");
    if (!(compose(b, a) == compose(dihedral_inverse(a), b)))
      rep.failures.push_back("relation ba = a^-1 b fails");
  }

  for (const auto& g : G) {
    if (!(act_on_poly(g, polynomial_P()) == polynomial_P()))
      rep.failures.push_back("element " + g.name + " does not fix P");
    if (!(act_on_poly(g, polynomial_Q()) == polynomial_Q()))
      rep.failures.push_back("element " + g.name + " does not fix Q");
  }
  return rep;
}

// ------------------------------------------------------------------
// Nielsen moves.  An endomorphism of the free group given by generator
// images induces a map on trace coordinates through the rewrite engine.
// ------------------------------------------------------------------

// the defining words of the nine coordinates, in coordinate order
inline const std::array<Word, 9>& generator_words() {
  static const std::array<Word, 9> ws = {
      Word::parse("a"),   Word::parse("A"),   Word::parse("b"),
      Word::parse("B"),   Word::parse("a*b"), Word::parse("A*B"),
      Word::parse("a*B"), Word::parse("A*b"), Word::parse("a*b*A*B")};
  return ws;
}

inline std::array<CoordPolynomial, 9> nielsen_action(const Word& img1, const Word& img2,
                                                     TraceRewriter& rw) {
  std::array<CoordPolynomial, 9> out;
  for (int i = 0; i < 9; ++i) out[i] = rw.reduce(generator_words()[i].substitute(img1, img2));
  return out;
}

inline std::array<CoordPolynomial, 9> nielsen_action(const Word& img1, const Word& img2) {
  TraceRewriter rw;
  return nielsen_action(img1, img2, rw);
}

// the three generating moves of Out(F₂)
inline std::pair<Word, Word> nielsen_tau() { return {Word::parse("b"), Word::parse("a")}; }
inline std::pair<Word, Word> nielsen_iota() { return {Word::parse("A"), Word::parse("b")}; }
inline std::pair<Word, Word> nielsen_eta() { return {Word::parse("a*b"), Word::parse("b")}; }

}  // namespace sl3cv
