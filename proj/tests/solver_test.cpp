#include <gtest/gtest.h>

#include "magnus/oracles.hpp"
#include "support/helpers.hpp"
#include "support/representations.hpp"

namespace magnus {
namespace {

using testing::P;
using testing::W;

bool trivial(const char* pres, const char* word) {
  Solver s;
  const auto p = P(pres);
  return s.word_problem(p, parse_word(word, p.alphabet())).trivial();
}

TEST(WordProblem, Commutator) {
  EXPECT_TRUE(trivial("a,b | abAB", "abAB"));
  EXPECT_FALSE(trivial("a,b | abAB", "ab"));
  EXPECT_TRUE(trivial("a,b | abAB", "baBA"));
  EXPECT_TRUE(trivial("a,b | abAB", ""));
}

TEST(WordProblem, BaumslagSolitarMatchesAffineOracle) {
  for (const char* w : {"babAB^3", "babAB^2", "abAB^2", "bAba", "a^2bA^2B^4", "ab^2AB"}) {
    const bool oracle = affine_eval_bs1n(W(w), 2).is_identity();
    EXPECT_EQ(trivial("a,b | abAB^2", w), oracle) << w;
  }
  // b a b a^-1 b^-2 collapses to b, not to the identity
  EXPECT_FALSE(trivial("a,b | abAB^2", "babAB^2"));
  EXPECT_TRUE(trivial("a,b | abAB^2", "babAB^3"));
}

TEST(WordProblem, KleinBottleMatchesDeckOracle) {
  const auto p = P("a,b | abaB");
  EXPECT_TRUE(testing::klein_eval(p.relator()).is_identity());
  for (const char* w : {"ba^2Ba^2", "abAB", "b^2aB^2A", "baBa", "ab^2AB^2"}) {
    EXPECT_EQ(trivial("a,b | abaB", w), testing::klein_eval(W(w)).is_identity()) << w;
  }
  EXPECT_TRUE(ncl_semidecide(p, W("ba^2Ba^2"), 2, 2));
}

TEST(WordProblem, TrefoilMatchesBurauOracle) {
  for (const char* w : {"a^2B^3a^2B^3", "ab", "a^2bA^2B", "abaBAB", "a^4B^6", "abAB"}) {
    EXPECT_EQ(trivial("a,b | a^2B^3", w), testing::trefoil_eval(W(w)).is_identity()) << w;
  }
}

TEST(WordProblem, SingleGeneratorAndFreeFactors) {
  EXPECT_TRUE(trivial("a | a^5", "a^10"));
  EXPECT_FALSE(trivial("a | a^5", "a^3"));
  EXPECT_TRUE(trivial("a,b | a^5", "ba^5B"));
  EXPECT_FALSE(trivial("a,b | a^5", "bab^-1a^4"));
  EXPECT_TRUE(trivial("a,b,c | abAB", "cabABC"));
  EXPECT_FALSE(trivial("a,b,c | abAB", "cabCAB"));
}

TEST(WordProblem, RejectsForeignGenerators) {
  Solver s;
  EXPECT_THROW(s.word_problem(P("a,b | abAB"), W("c")), UnknownGenerator);
}

TEST(Britton, PinchesLowerSubgroupUnderT) {
  Solver s;
  const auto zc = rewrite_zero_case(P("a,b | abAB^2"), Generator{0});
  const Word b0 = Word::letter(Generator{0}), b1 = Word::letter(Generator{1});
  // t b0 t^-1 -> b1
  auto f = s.britton_reduce(zc, {{Word{}, b0, Word{}}, {1, -1}});
  EXPECT_FALSE(f.has_stable_letter());
  EXPECT_EQ(f.pieces[0], b1);
  EXPECT_EQ(affine_eval_bs1n(W("abA"), 2), affine_eval_bs1n(zc.lift(b1), 2));
  // t^-1 t
  f = s.britton_reduce(zc, {{Word{}, Word{}, Word{}}, {-1, 1}});
  EXPECT_FALSE(f.has_stable_letter());
  EXPECT_TRUE(f.pieces[0].empty());
}

TEST(Britton, LeavesNonPinchAlone) {
  Solver s;
  const auto zc = rewrite_zero_case(P("a,b | abAB^2"), Generator{0});
  const Word b0 = Word::letter(Generator{0});
  // t^-1 b0 t: b0 is not in the upper subgroup ⟨b1⟩
  const auto f = s.britton_reduce(zc, {{Word{}, b0, Word{}}, {-1, 1}});
  EXPECT_EQ(f.signs, (std::vector<std::int8_t>{-1, 1}));
  EXPECT_EQ(f.pieces[1], b0);
  // the element a^-1 b a acts as x -> x + 1/2, which is no integer translation
  EXPECT_EQ(affine_eval_bs1n(W("Aba"), 2).offset, Rational(1, 2));
}

TEST(Britton, PinchUsesRecursiveMembership) {
  Solver s;
  const auto zc = rewrite_zero_case(P("a,b | abAB^2"), Generator{0});
  const Word b0 = Word::letter(Generator{0}), b1 = Word::letter(Generator{1});
  // b0 b1 = b0^3 lies in ⟨b0⟩, so t b0 b1 t^-1 pinches to b1^3
  const auto f = s.britton_reduce(zc, {{Word{}, b0 * b1, Word{}}, {1, -1}});
  EXPECT_FALSE(f.has_stable_letter());
  EXPECT_EQ(f.pieces[0], b1 * b1 * b1);
  EXPECT_EQ(affine_eval_bs1n(W("ababAA"), 2), affine_eval_bs1n(zc.lift(f.pieces[0]), 2));
}

TEST(Britton, HnnFormOfQueryWord) {
  Solver s;
  const auto zc = rewrite_zero_case(P("a,b | abAB^2"), Generator{0});
  const auto f = s.hnn_form(zc, W("a^2bA^2"));
  EXPECT_FALSE(f.has_stable_letter());
  EXPECT_EQ(format_word(f.pieces[0], zc.base.alphabet()), "b_1^2");
}

TEST(Membership, SolvesForTheMissingGenerator) {
  Solver s;
  const auto p = P("a,b,c | abc");
  const auto v = s.magnus_membership(p, W("c"), {Generator{0}, Generator{1}});
  ASSERT_TRUE(v.member());
  EXPECT_EQ(v.witness->expression, W("BA"));
  EXPECT_TRUE(s.word_problem(p, W("c") * v.witness->expression.inverse()).trivial());
}

TEST(Membership, FullSubsetReturnsTheWord) {
  Solver s;
  const auto v = s.magnus_membership(P("a,b | abAB"), W("ba"), {Generator{0}, Generator{1}});
  ASSERT_TRUE(v.member());
  EXPECT_EQ(v.witness->expression, W("ba"));
}

TEST(Membership, BaumslagSolitarStableLetterIsNotATranslation) {
  Solver s;
  const auto p = P("a,b | abAB^2");
  EXPECT_FALSE(s.magnus_membership(p, W("a"), {Generator{1}}).member());
  EXPECT_EQ(affine_eval_bs1n(W("a"), 2).scale, 2);
  const auto v = s.magnus_membership(p, W("abA"), {Generator{1}});
  ASSERT_TRUE(v.member());
  EXPECT_EQ(v.witness->expression, W("b^2"));
}

TEST(Membership, FreeFactorSyllables) {
  Solver s;
  const auto p = P("a,b,c | abc");
  EXPECT_FALSE(s.magnus_membership(p, W("ab"), {Generator{0}}).member());
  const auto q = P("a,b,c | abAB");
  EXPECT_TRUE(s.magnus_membership(q, W("cabABc"), {Generator{2}}).member());
  EXPECT_FALSE(s.magnus_membership(q, W("cac"), {Generator{2}}).member());
}

TEST(Membership, StableLetterInSubset) {
  Solver s;
  const auto p = P("a,b,c | aBAc");  // c = a b a^-1
  const auto v = s.magnus_membership(p, W("abA"), {Generator{0}, Generator{2}});
  ASSERT_TRUE(v.member());
  EXPECT_TRUE(s.word_problem(p, W("abA") * v.witness->expression.inverse()).trivial());
  for (Letter l : v.witness->expression) EXPECT_NE(l.gen, Generator{1});
}

TEST(Hierarchy, SingleGeneratorLeaf) {
  Solver s;
  const auto t = s.hierarchy_tree(P("a | a^5"));
  EXPECT_TRUE(std::holds_alternative<BaseSingleGen>(t.step.data));
  EXPECT_TRUE(t.children.empty());
}

TEST(Hierarchy, BaumslagSolitar) {
  Solver s;
  const auto t = s.hierarchy_tree(P("a,b | abAB^2"));
  ASSERT_TRUE(t.step.zero_case());
  ASSERT_EQ(t.children.size(), 1u);
  const auto& c = t.children[0];
  EXPECT_EQ(format_presentation(c.presentation), "b_0,b_1 | b_1 b_0^-2");
  EXPECT_TRUE(c.step.embedding());
  const HierarchyNode* n = &c;
  while (!n->children.empty()) n = &n->children[0];
  EXPECT_TRUE(n->step.is_base());
}

TEST(Hierarchy, Trefoil) {
  Solver s;
  const auto t = s.hierarchy_tree(P("a,b | a^2B^3"));
  ASSERT_TRUE(t.step.embedding());
  const auto& z = t.children.at(0);
  ASSERT_TRUE(z.step.zero_case());
  EXPECT_EQ(z.presentation.relator().size(), 8u);
  const auto& base = z.children.at(0);
  EXPECT_EQ(format_word(base.presentation.relator(), base.presentation.alphabet()), "y_0 y_3");
  EXPECT_EQ(base.free_generators, (std::vector<std::string>{"y_1", "y_2"}));
  const HierarchyNode* n = &base;
  while (!n->children.empty()) n = &n->children[0];
  EXPECT_TRUE(n->step.is_base());
}

TEST(IsRoot, Examples) {
  const Alphabet ab({"a", "b"});
  EXPECT_TRUE(is_root(W("a"), W("abaB"), ab));
  EXPECT_TRUE(is_root(W("abAB"), W("abAB"), ab));
  EXPECT_FALSE(is_root(W("a^2"), W("a"), ab));
}

TEST(Limits, DepthBudget) {
  SolverLimits l;
  l.max_depth = 0;
  Solver s(l);
  EXPECT_THROW(s.word_problem(P("a,b | abAB^2"), W("babAB^3")), ResourceExhausted);
  // the abelianization filter answers without descending
  EXPECT_FALSE(s.word_problem(P("a,b | abAB^2"), W("a")).trivial());
}

TEST(Limits, WordLengthBudget) {
  SolverLimits l;
  l.max_word_len = 4;
  Solver s(l);
  EXPECT_THROW(s.word_problem(P("a,b | abAB"), W("a^3b^3A^3B^3")), ResourceExhausted);
}

TEST(Limits, SubscriptSpanBudget) {
  SolverLimits l;
  l.max_subscript_span = 3;
  Solver s(l);
  EXPECT_THROW(s.word_problem(P("a,b | abAB^2"), W("ba^5bA^5B^33")), ResourceExhausted);
  Solver wide;
  EXPECT_TRUE(wide.word_problem(P("a,b | abAB^2"), W("ba^5bA^5B^33")).trivial());
}

TEST(Stats, MemoHitsAndDepth) {
  Solver s;
  const auto p = P("a,b | abAB^2");
  s.word_problem(p, W("babAB^3"));
  s.word_problem(p, W("babAB^3"));
  EXPECT_GT(s.stats().memo_hits, 0u);
  EXPECT_GT(s.stats().depth_reached, 0u);
  Solver plain(SolverLimits{}, false);
  plain.word_problem(p, W("babAB^3"));
  EXPECT_EQ(plain.stats().memo_hits, 0u);
}

}  // namespace
}  // namespace magnus
