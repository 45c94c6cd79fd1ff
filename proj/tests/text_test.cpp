#include <gtest/gtest.h>

#include "magnus/text.hpp"
#include "support/helpers.hpp"

namespace magnus {
namespace {

using testing::W;

const Alphabet kAB({"a", "b"});

template <class E>
std::size_t offset_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const E& e) {
    if constexpr (std::is_same_v<E, UnknownGenerator>) {
      return e.offset().value_or(static_cast<std::size_t>(-1));
    } else {
      return e.offset();
    }
  }
  ADD_FAILURE() << "no exception";
  return static_cast<std::size_t>(-1);
}

TEST(ParseWord, Examples) {
  EXPECT_EQ(parse_word("abAB", kAB), Word::reduce({pos(0), pos(1), neg(0), neg(1)}));
  EXPECT_EQ(parse_word("a^3B^2", kAB), Word::reduce({pos(0), pos(0), pos(0), neg(1), neg(1)}));
  EXPECT_EQ(offset_of<UnknownGenerator>([] { parse_word("abx", kAB); }), 2u);
}

TEST(ParseWord, PowersSignsAndIdentity) {
  EXPECT_EQ(parse_word("a^-2", kAB), parse_word("AA", kAB));
  EXPECT_EQ(parse_word("A^-2", kAB), parse_word("aa", kAB));
  EXPECT_EQ(parse_word("a^+1", kAB), parse_word("a", kAB));
  EXPECT_TRUE(parse_word("", kAB).empty());
  EXPECT_TRUE(parse_word("1", kAB).empty());
  EXPECT_TRUE(parse_word("aA", kAB).empty());
  EXPECT_EQ(parse_word(" a b ", kAB), parse_word("ab", kAB));
}

TEST(ParseWord, SyntaxErrorsCarryOffsets) {
  EXPECT_EQ(offset_of<SyntaxError>([] { parse_word("ab^", kAB); }), 3u);
  EXPECT_EQ(offset_of<SyntaxError>([] { parse_word("a^0", kAB); }), 2u);
  EXPECT_EQ(offset_of<SyntaxError>([] { parse_word("a2", kAB); }), 1u);
  EXPECT_EQ(offset_of<SyntaxError>([] { parse_word("a^x", kAB); }), 2u);
  EXPECT_EQ(offset_of<SyntaxError>([] { parse_word("a*b", kAB); }), 1u);
  EXPECT_EQ(offset_of<SyntaxError>([] { parse_word("11", kAB); }), 0u);
}

TEST(ParsePresentation, Examples) {
  const auto p = parse_presentation("a,b | abAB");
  EXPECT_EQ(p.alphabet().names(), (std::vector<std::string>{"a", "b"}));
  EXPECT_EQ(p.relator(), W("abAB"));
  EXPECT_EQ(parse_presentation("a,b | abaB^2").relator(), Word::reduce({pos(0), pos(1), pos(0), neg(1), neg(1)}));
  EXPECT_EQ(offset_of<SyntaxError>([] { parse_presentation("a,b abAB"); }), 8u);
}

TEST(ParsePresentation, Errors) {
  EXPECT_THROW(parse_presentation("a,b | aA"), EmptyRelator);
  EXPECT_EQ(offset_of<SyntaxError>([] { parse_presentation("a,a | a"); }), 2u);
  EXPECT_EQ(offset_of<SyntaxError>([] { parse_presentation("a,B | a"); }), 2u);
  EXPECT_EQ(offset_of<SyntaxError>([] { parse_presentation("a,| a"); }), 2u);
  EXPECT_EQ(offset_of<UnknownGenerator>([] { parse_presentation("a,b | abc"); }), 8u);
  EXPECT_EQ(offset_of<SyntaxError>([] { parse_presentation("ab | a"); }), 1u);
}

TEST(ParseSubset, Examples) {
  const Alphabet abc({"a", "b", "c"});
  EXPECT_EQ(parse_subset("a, c", abc), (std::set<Generator>{Generator{0}, Generator{2}}));
  EXPECT_TRUE(parse_subset("", abc).empty());
  EXPECT_THROW(parse_subset("a,d", abc), UnknownGenerator);
  EXPECT_THROW(parse_subset("a,,b", abc), SyntaxError);
}

TEST(FormatWord, Compact) {
  EXPECT_EQ(format_word(W("a^3B^2ab"), kAB), "a^3B^2ab");
  EXPECT_EQ(format_word(Word{}, kAB), "1");
}

TEST(FormatWord, Subscripted) {
  const Alphabet sub({"b_0", "b_1"});
  EXPECT_EQ(format_word(Word::reduce({pos(1), neg(0), neg(0)}), sub), "b_1 b_0^-2");
}

TEST(FormatWord, RoundTripRandom) {
  std::mt19937_64 rng(51);
  const Alphabet abc({"a", "b", "c"});
  for (int i = 0; i < 1000; ++i) {
    const Word w = testing::random_word(rng, 3, 20);
    EXPECT_EQ(parse_word(format_word(w, abc), abc), w);
  }
}

TEST(HierarchyJson, SchemaFields) {
  Solver s;
  const auto j = hierarchy_json(s.hierarchy_tree(parse_presentation("a,b | abAB^2")));
  EXPECT_EQ(j["case"], "zero");
  EXPECT_EQ(j["stable"], "a");
  EXPECT_EQ(j["ranges"]["b"], nlohmann::json::array({0, 1}));
  EXPECT_EQ(j["relator"], "abAB^2");
  ASSERT_EQ(j["children"].size(), 1u);
  EXPECT_EQ(j["children"][0]["case"], "nonzero");
  EXPECT_EQ(j["children"][0]["relator"], "b_1 b_0^-2");
  EXPECT_FALSE(j["children"][0].contains("stable"));
}

}  // namespace
}  // namespace magnus
