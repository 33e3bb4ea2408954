#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <random>
#include <sstream>

#include <lmod/rewrite.hpp>
#include <lmod/suites.hpp>

using namespace lmod;

TEST_CASE("rule table is Psi-validated and named") {
  CHECK(rule_table().size() == 5);
  for (const RewriteRule& r : rule_table()) {
    CHECK(eval_psi(r.lhs) == eval_psi(r.rhs));
    CHECK(rule_from_name(rule_name(r.id)) == r.id);
  }
  CHECK_THROWS_AS(rule_from_name("nope"), std::invalid_argument);
}

TEST_CASE("rewrite_apply on the documented examples") {
  CHECK(rewrite_apply(word_parse("a b a"), RuleId::BraidAB, 0, Direction::Forward) ==
        word_parse("b a b"));
  CHECK(rewrite_apply(word_parse("a c"), RuleId::CommAC, 0, Direction::Forward) ==
        word_parse("c a"));
  CHECK(rewrite_apply(word_parse("b c b^-1"), RuleId::BraidConjBC, 0, Direction::Forward) ==
        word_parse("c^-1 b c"));
  // backward replaces the right side by the left
  CHECK(rewrite_apply(word_parse("c a"), RuleId::CommAC, 0, Direction::Backward) ==
        word_parse("a c"));
  CHECK(rewrite_apply(word_parse("c^-1 b c"), RuleId::BraidConjBC, 0, Direction::Backward) ==
        word_parse("b c b^-1"));
}

TEST_CASE("rewriting matches inside exponent runs") {
  // c^2 b = c (c b ...): braid-bc backward needs c b c, present in c^2 b c
  const TwistWord w = word_parse("c^2 b c");
  CHECK(rewrite_apply(w, RuleId::BraidBC, 1, Direction::Backward) == word_parse("c b c b"));
  // result is freely reduced across the seam
  const TwistWord u = word_parse("b^-1 a c a^-1");
  CHECK(rewrite_apply(u, RuleId::CommAC, 1, Direction::Forward) == word_parse("b^-1 c"));
}

TEST_CASE("no-match errors") {
  CHECK_THROWS_AS(rewrite_apply(word_parse("a c"), RuleId::BraidAB, 0, Direction::Forward),
                  RewriteError);
  CHECK_THROWS_AS(rewrite_apply(word_parse("a b a"), RuleId::BraidAB, 1, Direction::Forward),
                  RewriteError);
  CHECK_THROWS_AS(rewrite_apply(word_parse("a b a"), RuleId::BraidAB, 7, Direction::Forward),
                  RewriteError);
  // rules never touch i
  CHECK_THROWS_AS(rewrite_apply(word_parse("i c"), RuleId::CommAC, 0, Direction::Forward),
                  RewriteError);
}

TEST_CASE("rules apply around i but never across it") {
  const TwistWord w = word_parse("i a c i");
  CHECK(rewrite_matches(w, rule(RuleId::CommAC), Direction::Forward) ==
        std::vector<std::size_t>{1});
  CHECK(rewrite_apply(w, RuleId::CommAC, 1, Direction::Forward) == word_parse("i c a i"));
}

TEST_CASE("match enumeration") {
  const TwistWord w = word_parse("(c b)^6");
  CHECK(rewrite_matches(w, rule(RuleId::BraidBC), Direction::Forward) ==
        std::vector<std::size_t>{1, 3, 5, 7, 9});
  CHECK(rewrite_matches(w, rule(RuleId::BraidBC), Direction::Backward) ==
        std::vector<std::size_t>{0, 2, 4, 6, 8});
}

TEST_CASE("random rewrites preserve Psi") {
  std::mt19937_64 rng(707);
  std::uniform_int_distribution<std::size_t> rule_pick(0, rule_table().size() - 1);
  std::uniform_int_distribution<int> dir_pick(0, 1);
  int applied = 0;
  while (applied < 300) {
    const TwistWord w = random_word(rng, 10);
    const RewriteRule& r = rule_table()[rule_pick(rng)];
    const Direction dir = dir_pick(rng) ? Direction::Forward : Direction::Backward;
    const auto positions = rewrite_matches(w, r, dir);
    if (positions.empty()) continue;
    std::uniform_int_distribution<std::size_t> pos_pick(0, positions.size() - 1);
    const TwistWord out = rewrite_apply(w, r, positions[pos_pick(rng)], dir);
    REQUIRE(eval_psi(out) == eval_psi(w));
    ++applied;
  }
}

TEST_CASE("script parsing") {
  const std::string text =
      "# comment\n"
      "braid-bc 0 forward\n"
      "\n"
      "comm-ac 3 backward  # trailing comment\n";
  const std::vector<ScriptStep> steps = parse_script(text);
  REQUIRE(steps.size() == 2);
  CHECK(steps[0].rule == RuleId::BraidBC);
  CHECK(steps[0].position == 0);
  CHECK(steps[0].dir == Direction::Forward);
  CHECK(steps[1].rule == RuleId::CommAC);
  CHECK(steps[1].position == 3);
  CHECK(steps[1].dir == Direction::Backward);

  CHECK_THROWS_AS(parse_script("braid-bc zero forward"), std::invalid_argument);
  CHECK_THROWS_AS(parse_script("braid-bc 0 sideways"), std::invalid_argument);
  CHECK_THROWS_AS(parse_script("nope 0 forward"), std::invalid_argument);
  CHECK_THROWS_AS(parse_script("braid-bc 0 forward extra"), std::invalid_argument);
}

TEST_CASE("shipped scripts replay") {
  {
    std::ifstream in(std::string(LMOD_DATA_DIR) + "/eq2_braid_moves.script");
    REQUIRE(in.good());
    TwistWord w = word_parse("(b c)^6");
    for (const ScriptStep& s : parse_script(in)) w = rewrite_apply(w, s.rule, s.position, s.dir);
    CHECK(w == word_parse("(c^2 b)^4"));
  }
  {
    std::ifstream in(std::string(LMOD_DATA_DIR) + "/c2b4_to_c3b3.script");
    REQUIRE(in.good());
    TwistWord w = word_parse("(c^2 b)^4");
    for (const ScriptStep& s : parse_script(in)) w = rewrite_apply(w, s.rule, s.position, s.dir);
    CHECK(w == word_parse("(c^3 b)^3"));
  }
}
