#include "sl3cv/word.hpp"

#include <gtest/gtest.h>

#include <map>
#include <stdexcept>

#include "sl3cv/rng.hpp"

using namespace sl3cv;

namespace {

Word random_word(SplitMix64& g, long len) {
  Word w;
  while (w.length() < len) {
    int gen = 1 + static_cast<int>(g.below(2));
    long e = g.below(2) ? 1 : -1;
    w.append({gen, e});
  }
  return w;
}

TEST(Word, ParsePrintGoldens) {
  EXPECT_EQ(Word::parse("a*b").str(), "a*b");
  EXPECT_EQ(Word::parse("a b").str(), "a*b");
  EXPECT_EQ(Word::parse("A^2").str(), "a^-2");
  EXPECT_EQ(Word::parse("a^-2").str(), "a^-2");
  EXPECT_EQ(Word::parse("a^3*b^-2").str(), "a^3*b^-2");
  EXPECT_EQ(Word::parse("B^-1").str(), "b");
  EXPECT_EQ(Word::parse("1").str(), "1");
  EXPECT_EQ(Word::parse("").str(), "1");
  EXPECT_EQ(Word::parse("  ").str(), "1");
}

TEST(Word, EagerFreeReduction) {
  EXPECT_TRUE(Word::parse("a*A").empty());
  EXPECT_EQ(Word::parse("a*a*a").str(), "a^3");
  EXPECT_EQ(Word::parse("a*b*B*A").str(), "1");
  EXPECT_EQ(Word::parse("a^2*A^3").str(), "a^-1");
  // no unreduced Word can be built
  Word w;
  w.append({1, 2});
  w.append({1, -2});
  EXPECT_TRUE(w.empty());
}

TEST(Word, ParseErrors) {
  EXPECT_THROW(Word::parse("a*c"), std::invalid_argument);
  EXPECT_THROW(Word::parse("a^0"), std::invalid_argument);
  EXPECT_THROW(Word::parse("a^"), std::invalid_argument);
  EXPECT_THROW(Word::parse("a^x"), std::invalid_argument);
  EXPECT_THROW(Word::parse("a*"), std::invalid_argument);
  EXPECT_THROW(Word::parse("1*a"), std::invalid_argument);
  EXPECT_THROW(Word::letter(3, 1), std::invalid_argument);
}

TEST(Word, ParseInvertsPrinter) {
  SplitMix64 g{1};
  for (int i = 0; i < 200; ++i) {
    Word w = random_word(g, 1 + static_cast<long>(g.below(12)));
    EXPECT_EQ(Word::parse(w.str()), w);
  }
  EXPECT_EQ(Word::parse(Word{}.str()), Word{});
}

TEST(Word, Lengths) {
  EXPECT_EQ(Word::parse("a*b").length(), 2);
  EXPECT_EQ(Word::parse("a^3*b^-2").length(), 5);
  EXPECT_EQ(Word{}.length(), 0);
  EXPECT_EQ(Word::parse("a*b").weighted_length(), 2);
  EXPECT_EQ(Word::parse("a^3*b^-2").weighted_length(), 7);
  EXPECT_EQ(Word::parse("A*B").weighted_length(), 4);
}

TEST(Word, WeightedDominatesLength) {
  SplitMix64 g{2};
  for (int i = 0; i < 200; ++i) {
    Word w = random_word(g, static_cast<long>(g.below(10)));
    EXPECT_GE(w.weighted_length(), w.length());
    bool all_pos = true;
    for (const Letter& l : w.letters()) all_pos = all_pos && l.exp > 0;
    EXPECT_EQ(w.weighted_length() == w.length(), all_pos);
  }
}

TEST(Word, InverseAndPow) {
  Word w = Word::parse("a^2*b^-1*a");
  EXPECT_EQ(w.inverse().str(), "a^-1*b*a^-2");
  EXPECT_TRUE((w * w.inverse()).empty());
  EXPECT_EQ(w.inverse().inverse(), w);
  EXPECT_EQ(w.pow(0), Word{});
  EXPECT_EQ(w.pow(3), w * w * w);
  EXPECT_EQ(w.pow(-2), (w * w).inverse());
  SplitMix64 g{3};
  for (int i = 0; i < 100; ++i) {
    Word v = random_word(g, static_cast<long>(g.below(9)));
    EXPECT_EQ(v.inverse().length(), v.length());
  }
}

TEST(Word, CyclicReduce) {
  {
    auto [core, conj] = Word::parse("a*b").cyclic_reduce();
    EXPECT_EQ(core, Word::parse("a*b"));
    EXPECT_TRUE(conj.empty());
  }
  {
    // conjugated word unwinds to w = c · core · c⁻¹
    Word w = Word::parse("A*b*a^2*B*a");
    auto [core, conj] = w.cyclic_reduce();
    EXPECT_EQ(conj * core * conj.inverse(), w);
    EXPECT_TRUE(core.empty() || core.size() == 1 || core.front().gen != core.back().gen);
  }
  SplitMix64 g{4};
  for (int i = 0; i < 300; ++i) {
    Word w = random_word(g, static_cast<long>(g.below(14)));
    auto [core, conj] = w.cyclic_reduce();
    EXPECT_EQ(conj * core * conj.inverse(), w);
    auto again = core.cyclic_reduce();  // idempotent on the core
    EXPECT_EQ(again.core, core);
    EXPECT_TRUE(again.conjugator.empty());
  }
}

TEST(Word, CyclicNormalForm) {
  // all rotations of a cyclically reduced word share the normal form
  Word w = Word::parse("a*b^-1*a^2*b");
  Word nf = w.cyclic_normal_form();
  const auto& ls = w.letters();
  for (std::size_t r = 0; r < ls.size(); ++r) {
    Word rot;
    for (std::size_t k = 0; k < ls.size(); ++k) rot.append(ls[(r + k) % ls.size()]);
    if (rot.size() == ls.size()) {  // skip rotations that merge at the seam
      EXPECT_EQ(rot.cyclic_normal_form(), nf);
    }
  }
  // conjugation invariance
  SplitMix64 g{5};
  for (int i = 0; i < 100; ++i) {
    Word v = random_word(g, 1 + static_cast<long>(g.below(8)));
    Word c = random_word(g, static_cast<long>(g.below(5)));
    EXPECT_EQ((c * v * c.inverse()).cyclic_normal_form(), v.cyclic_normal_form());
  }
}

TEST(Word, PowerDecomposition) {
  {
    auto pd = Word::parse("a*b*a*b*a*b").power_decomposition();
    EXPECT_EQ(pd.base, Word::parse("a*b"));
    EXPECT_EQ(pd.count, 3);
  }
  {
    auto pd = Word::parse("a^4").power_decomposition();
    EXPECT_EQ(pd.base, Word::parse("a"));
    EXPECT_EQ(pd.count, 4);
  }
  {
    auto pd = Word::parse("a*b^-1").power_decomposition();
    EXPECT_EQ(pd.count, 1);
  }
  SplitMix64 g{6};
  for (int i = 0; i < 100; ++i) {
    Word v = random_word(g, 1 + static_cast<long>(g.below(6)));
    auto pd = v.power_decomposition();
    EXPECT_EQ(pd.base.pow(pd.count), v);
  }
}

TEST(Word, Substitute) {
  Word w = Word::parse("a*b*A*B");
  EXPECT_EQ(w.substitute(Word::parse("b"), Word::parse("a")), Word::parse("b*a*B*A"));
  // x1 -> x1 x2 keeps the commutator
  EXPECT_EQ(w.substitute(Word::parse("a*b"), Word::parse("b")), w);
  EXPECT_EQ(Word::parse("a^2").substitute(Word::parse("a*b"), Word::parse("b")),
            Word::parse("a*b*a*b"));
}

TEST(Word, NetExponentAndAtoms) {
  Word w = Word::parse("a^3*b^-2*a^-1");
  EXPECT_EQ(w.net_exponent(1), 2);
  EXPECT_EQ(w.net_exponent(2), -2);
  EXPECT_EQ(w.max_abs_exponent(), 3);
  auto at = w.atoms();
  ASSERT_EQ(at.size(), 6u);
  EXPECT_EQ(at[0], (Letter{1, 1}));
  EXPECT_EQ(at[4], (Letter{2, -1}));
}

TEST(Word, UsableAsMapKey) {
  std::map<Word, int> m;
  m[Word::parse("a*b")] = 1;
  m[Word::parse("a")] = 2;
  m[Word::parse("a b")] = 3;  // same word
  EXPECT_EQ(m.size(), 2u);
  EXPECT_EQ(m[Word::parse("a*b")], 3);
}

}  // namespace
