#include <catch2/catch_amalgamated.hpp>

#include <random>

#include <lmod/suites.hpp>
#include <lmod/word.hpp>

using namespace lmod;

namespace {

TwistWord runs(std::initializer_list<std::pair<Letter, long long>> rs) {
  TwistWord w;
  for (const auto& [l, e] : rs) w.push(l, e);
  return w;
}

}  // namespace

TEST_CASE("word_parse basic forms") {
  CHECK(word_parse("a^2 b^-1 c") ==
        runs({{Letter::A, 2}, {Letter::B, -1}, {Letter::C, 1}}));
  CHECK(word_parse("a a^-1").empty());
  CHECK(word_parse("c^-2 b a^3 i") ==
        runs({{Letter::C, -2}, {Letter::B, 1}, {Letter::A, 3}, {Letter::Iota, 1}}));
  CHECK(word_parse("").empty());
  CHECK(word_parse("  \t ").empty());
}

TEST_CASE("word_parse groups") {
  CHECK(word_parse("(b c)^6").length() == 12);
  CHECK(word_parse("(a b^-1)^2") ==
        runs({{Letter::A, 1}, {Letter::B, -1}, {Letter::A, 1}, {Letter::B, -1}}));
  CHECK(word_parse("(b c)^-1") == runs({{Letter::C, -1}, {Letter::B, -1}}));
  CHECK(word_parse("(c^3 (a b) c^-3)^1") == word_parse("c^3 a b c^-3"));
  CHECK(word_parse("(a a^-1)^7").empty());
}

TEST_CASE("word_parse rejects bad input") {
  CHECK_THROWS_AS(word_parse("q"), ParseError);
  CHECK_THROWS_AS(word_parse("a^0"), ParseError);
  CHECK_THROWS_AS(word_parse("(b c)^0"), ParseError);
  CHECK_THROWS_AS(word_parse("a^"), ParseError);
  CHECK_THROWS_AS(word_parse("(b c"), ParseError);
  CHECK_THROWS_AS(word_parse("b c)"), ParseError);
  CHECK_THROWS_AS(word_parse("a b x c"), ParseError);

  try {
    word_parse("a b x c");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position == 4);
  }
}

TEST_CASE("multiply and inverse") {
  CHECK((runs({{Letter::A, 1}}) * runs({{Letter::A, -1}})).empty());
  CHECK(runs({{Letter::B, 2}}) * runs({{Letter::B, 3}}) == runs({{Letter::B, 5}}));
  CHECK(runs({{Letter::A, 1}}) * runs({{Letter::B, 1}}) ==
        runs({{Letter::A, 1}, {Letter::B, 1}}));

  CHECK(runs({{Letter::A, 2}, {Letter::B, -1}}).inverse() ==
        runs({{Letter::B, 1}, {Letter::A, -2}}));
  CHECK(TwistWord().inverse().empty());
  CHECK(runs({{Letter::Iota, 1}}).inverse() == runs({{Letter::Iota, -1}}));

  // cancellation cascades through the seam
  const TwistWord u = word_parse("a b c");
  const TwistWord v = word_parse("c^-1 b^-1 a");
  CHECK(u * v == word_parse("a^2"));
}

TEST_CASE("free reduction properties") {
  std::mt19937_64 rng(42);
  for (int t = 0; t < 300; ++t) {
    const TwistWord u = random_word(rng, 8);
    const TwistWord v = random_word(rng, 8);
    const TwistWord w = random_word(rng, 8);

    // reduction is idempotent: rebuilding from units changes nothing
    CHECK(TwistWord::from_units(u.units()) == u);
    // length is non-increasing under multiplication
    CHECK((u * v).length() <= u.length() + v.length());
    // associativity on reduced forms
    CHECK((u * v) * w == u * (v * w));
    // inverse cancels
    CHECK((u * u.inverse()).empty());
  }
}

TEST_CASE("str round-trips through the parser") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 100; ++t) {
    const TwistWord u = random_word(rng, 10);
    CHECK(word_parse(u.str()) == u);
  }
  CHECK(word_parse("i^2") == runs({{Letter::Iota, 2}}));  // i^2 is not cancelled
}

TEST_CASE("pow") {
  CHECK(word_parse("a").pow(5) == runs({{Letter::A, 5}}));
  CHECK(word_parse("a b").pow(0).empty());
  CHECK(word_parse("a b").pow(-1) == word_parse("b^-1 a^-1"));
  CHECK(word_parse("b c").pow(3) == word_parse("b c b c b c"));
  // single-run powers stay compact even for huge exponents
  const Int big = Int("123456789012345678901234567890");
  CHECK(TwistWord::letter(Letter::C).pow(big).runs()[0].exp == big);
}
