#pragma once

// Single-step rewriting with the twist relations
//
//   comm-ac        a c        <->  c a
//   braid-ab       a b a      <->  b a b
//   braid-bc       b c b      <->  c b c
//   braid-conj-ab  a b a^-1   <->  b^-1 a b
//   braid-conj-bc  b c b^-1   <->  c^-1 b c
//
// Patterns match literal segments of the unit-letter expansion; no rule
// touches the letter i. Both sides of every rule have the same Psi image
// (checked when the rule table is built). Scripts are plain text, one step
// per line: "rule-id position direction".

#include <array>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "psi.hpp"
#include "word.hpp"

namespace lmod {

enum class RuleId : std::uint8_t { CommAC, BraidAB, BraidBC, BraidConjAB, BraidConjBC };
enum class Direction : std::uint8_t { Forward, Backward };

inline std::string rule_name(RuleId id) {
  switch (id) {
    case RuleId::CommAC: return "comm-ac";
    case RuleId::BraidAB: return "braid-ab";
    case RuleId::BraidBC: return "braid-bc";
    case RuleId::BraidConjAB: return "braid-conj-ab";
    case RuleId::BraidConjBC: return "braid-conj-bc";
  }
  throw std::logic_error("bad rule id");
}

inline RuleId rule_from_name(std::string_view name) {
  if (name == "comm-ac") return RuleId::CommAC;
  if (name == "braid-ab") return RuleId::BraidAB;
  if (name == "braid-bc") return RuleId::BraidBC;
  if (name == "braid-conj-ab") return RuleId::BraidConjAB;
  if (name == "braid-conj-bc") return RuleId::BraidConjBC;
  throw std::invalid_argument("unknown rewrite rule '" + std::string(name) + "'");
}

struct RewriteRule {
  RuleId id;
  TwistWord lhs, rhs;
};

struct RewriteError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

inline RewriteRule make_rule(RuleId id, std::string_view lhs, std::string_view rhs) {
  RewriteRule r{id, word_parse(lhs), word_parse(rhs)};
  if (eval_psi(r.lhs) != eval_psi(r.rhs))
    throw std::logic_error("rewrite rule " + rule_name(id) + ": sides differ under Psi");
  return r;
}

}  // namespace detail

inline const std::array<RewriteRule, 5>& rule_table() {
  static const std::array<RewriteRule, 5> rules{
      detail::make_rule(RuleId::CommAC, "a c", "c a"),
      detail::make_rule(RuleId::BraidAB, "a b a", "b a b"),
      detail::make_rule(RuleId::BraidBC, "b c b", "c b c"),
      detail::make_rule(RuleId::BraidConjAB, "a b a^-1", "b^-1 a b"),
      detail::make_rule(RuleId::BraidConjBC, "b c b^-1", "c^-1 b c"),
  };
  return rules;
}

inline const RewriteRule& rule(RuleId id) {
  return rule_table()[static_cast<std::size_t>(id)];
}

namespace detail {

inline bool segment_matches(const std::vector<Unit>& units, std::size_t pos,
                            const std::vector<Unit>& pat) {
  if (pos + pat.size() > units.size()) return false;
  for (std::size_t t = 0; t < pat.size(); ++t)
    if (!(units[pos + t] == pat[t])) return false;
  return true;
}

}  // namespace detail

// Replaces the matched pattern occurrence by the other side and freely
// reduces. Position indexes the unit-letter expansion of u.
inline TwistWord rewrite_apply(const TwistWord& u, const RewriteRule& r, std::size_t position,
                               Direction dir) {
  const TwistWord& from = dir == Direction::Forward ? r.lhs : r.rhs;
  const TwistWord& to = dir == Direction::Forward ? r.rhs : r.lhs;
  const std::vector<Unit> units = u.units();
  const std::vector<Unit> pat = from.units();
  if (!detail::segment_matches(units, position, pat))
    throw RewriteError("rule " + rule_name(r.id) + " (" +
                       (dir == Direction::Forward ? "forward" : "backward") +
                       ") does not match at position " + std::to_string(position));
  TwistWord out;
  for (std::size_t t = 0; t < position; ++t) out.push(units[t].sym, units[t].sign);
  for (const Run& run : to.runs()) out.push(run.sym, run.exp);
  for (std::size_t t = position + pat.size(); t < units.size(); ++t)
    out.push(units[t].sym, units[t].sign);
  return out;
}

inline TwistWord rewrite_apply(const TwistWord& u, RuleId id, std::size_t position,
                               Direction dir) {
  return rewrite_apply(u, rule(id), position, dir);
}

// All unit positions where the rule applies in the given direction.
inline std::vector<std::size_t> rewrite_matches(const TwistWord& u, const RewriteRule& r,
                                                Direction dir) {
  const TwistWord& from = dir == Direction::Forward ? r.lhs : r.rhs;
  const std::vector<Unit> units = u.units();
  const std::vector<Unit> pat = from.units();
  std::vector<std::size_t> out;
  if (pat.empty() || pat.size() > units.size()) return out;
  for (std::size_t pos = 0; pos + pat.size() <= units.size(); ++pos)
    if (detail::segment_matches(units, pos, pat)) out.push_back(pos);
  return out;
}

struct ScriptStep {
  RuleId rule;
  std::size_t position;
  Direction dir;
};

// One step per line: "rule-id position direction"; '#' starts a comment.
inline std::vector<ScriptStep> parse_script(std::istream& in) {
  std::vector<ScriptStep> steps;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string rname, dname;
    long long pos = -1;
    if (!(ls >> rname)) continue;  // blank
    if (!(ls >> pos >> dname) || pos < 0)
      throw std::invalid_argument("script line " + std::to_string(lineno) +
                                  ": expected 'rule-id position direction'");
    std::string extra;
    if (ls >> extra)
      throw std::invalid_argument("script line " + std::to_string(lineno) + ": trailing tokens");
    Direction dir;
    if (dname == "forward")
      dir = Direction::Forward;
    else if (dname == "backward")
      dir = Direction::Backward;
    else
      throw std::invalid_argument("script line " + std::to_string(lineno) +
                                  ": direction must be forward or backward");
    steps.push_back({rule_from_name(rname), static_cast<std::size_t>(pos), dir});
  }
  return steps;
}

inline std::vector<ScriptStep> parse_script(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_script(in);
}

}  // namespace lmod
