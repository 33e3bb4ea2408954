#pragma once

// Verification of twist-word identities. Psi mode compares images (a
// necessary condition only: Psi has a large kernel, so matrix equality
// never certifies equality of mapping classes). Rewrite-script mode replays
// an explicit sequence of single relation moves.

#include <string>
#include <vector>

#include "psi.hpp"
#include "report.hpp"
#include "rewrite.hpp"
#include "word.hpp"

namespace lmod {

struct IdentityResult {
  bool ok;
  std::string detail;
};

inline IdentityResult verify_identity_psi(const TwistWord& lhs, const TwistWord& rhs) {
  const Mat3 l = eval_psi(lhs);
  const Mat3 r = eval_psi(rhs);
  if (l == r) return {true, "Psi images agree (necessary condition only)"};
  for (int row = 0; row < 3; ++row)
    for (int col = 0; col < 3; ++col)
      if (l.at(row, col) != r.at(row, col))
        return {false, "Psi images differ first at entry (" + std::to_string(row + 1) + "," +
                           std::to_string(col + 1) + "): " + l.at(row, col).str() + " vs " +
                           r.at(row, col).str()};
  return {false, "unreachable"};
}

inline IdentityResult verify_identity_script(const TwistWord& lhs, const TwistWord& rhs,
                                             const std::vector<ScriptStep>& steps) {
  TwistWord w = lhs;
  for (std::size_t t = 0; t < steps.size(); ++t) {
    const ScriptStep& s = steps[t];
    try {
      w = rewrite_apply(w, s.rule, s.position, s.dir);
    } catch (const RewriteError& e) {
      return {false, "step " + std::to_string(t + 1) + " failed: " + e.what() +
                         "; word was '" + w.str() + "'"};
    }
  }
  if (w == rhs) return {true, std::to_string(steps.size()) + " steps replayed"};
  return {false, "script ended at '" + w.str() + "', expected '" + rhs.str() + "'"};
}

// A chain of words asserted pairwise equal under Psi, in display order.
struct IdentityChain {
  std::string name;
  std::vector<std::string> words;
};

// c b a (b c)^6 a^-1 b^-1 c^-1 = (a b)^6
inline IdentityChain eq1_chain() {
  return {"eq1", {"c b a (b c)^6 a^-1 b^-1 c^-1", "(a b)^6"}};
}

// (b c)^6 = (c b)^6 = (c (b c b) c b)^2 = (c (c b c) c b)^2 = (c^2 b)^4
inline IdentityChain eq2_chain() {
  return {"eq2",
          {"(b c)^6", "(c b)^6", "(c (b c b) c b)^2", "(c (c b c) c b)^2", "(c^2 b)^4"}};
}

// The reduction chains for k = 2 and k = 3: every displayed equality used to
// cut the generating set down to {a, b, c^k, i}.
inline std::vector<IdentityChain> reduction_chains(long long k) {
  if (k == 2) return {eq1_chain(), eq2_chain()};
  if (k != 3) throw std::invalid_argument("reduction_chains: only k = 2 and k = 3");
  std::vector<IdentityChain> chains;
  chains.push_back(eq1_chain());
  chains.push_back({"conj-c",
                    {"c^2 b a (b c)^6 a^-1 b^-1 c^-2", "c (a b)^6 c^-1"}});
  chains.push_back({"conj-b2",
                    {"c b^2 a (b c)^6 a^-1 b^-2 c^-1",
                     "(c b^2 c^-1) a (b c)^6 a^-1 (c b^-2 c^-1)",
                     "b^-1 c^2 b a (b c)^6 a^-1 b^-1 c^-2 b",
                     "b^-1 c (a b)^6 c^-1 b"}});
  chains.push_back(
      {"conj-c2b2",
       {"c^2 b^2 a (b c)^6 a^-1 b^-2 c^-2",
        "c^3 (c^-1 b^2 c) a (b c)^6 (c^3 (c^-1 b^2 c) a)^-1",
        "(c^3 b c^3) c^-1 b^-1 a (b c)^6 ((c^3 b c^3) c^-1 b^-1 a)^-1",
        "(c^3 b c^3) c^-1 (b^-1 a b) (b c)^6 ((c^3 b c^3) c^-1 (b^-1 a b))^-1",
        "(c^3 b c^3 a) c^-1 b a^-1 (b c)^6 ((c^3 b c^3 a) c^-1 b a^-1)^-1",
        "(c^3 b c^3 a) c^-1 b ((a^-1 b a) c)^6 ((c^3 b c^3 a) c^-1 b)^-1",
        "(c^3 b c^3 a) c^-1 b (b a b^-1 c)^6 ((c^3 b c^3 a) c^-1 b)^-1",
        "(c^3 b c^3 a) c^-1 b^2 (a (b^-1 c b))^6 ((c^3 b c^3 a) c^-1 b^2)^-1",
        "(c^3 b c^3 a) c^-1 b^2 (a c b c^-1)^6 ((c^3 b c^3 a) c^-1 b^2)^-1",
        "(c^3 b c^3 a) (c^-1 b^2 c) (a b)^6 ((c^3 b c^3 a) (c^-1 b^2 c))^-1",
        "(c^3 b c^3 a b c^3) c^-1 (a b)^6 c (c^3 b c^3 a b c^3)^-1"}});
  chains.push_back({"push-conj-c",
                    {"c (a b)^6 c^-1", "(a c b c^-1)^6", "(a b^-1 c b)^6",
                     "b^-1 (b a b^-1 c)^6 b", "b^-1 (a^-1 b a c)^6 b",
                     "b^-1 a^-1 (b c)^6 a b"}});
  chains.push_back({"push-conj-c-inv",
                    {"c^-1 (a b)^6 c", "(a c^-1 b c)^6", "(a b c b^-1)^6",
                     "b (b^-1 a b c)^6 b^-1", "b (a b a^-1 c)^6 b^-1",
                     "b a (b c)^6 a^-1 b^-1"}});
  chains.push_back({"chain-c3b",
                    {"(b c)^6", "(c b)^6", "(c^2 b)^4", "c^2 b c^2 b c^2 b c^2 b",
                     "c^3 (c^-1 b c) c b c^2 b c^2 b", "c^3 b c (b^-1 c b) c^2 b c^2 b",
                     "c^3 b c^2 (b c b) c^2 b", "c^3 b c^3 b c^3 b", "(c^3 b)^3"}});
  return chains;
}

inline Report verify_chain(Report& rep, const IdentityChain& chain) {
  for (std::size_t t = 0; t + 1 < chain.words.size(); ++t) {
    const IdentityResult res =
        verify_identity_psi(word_parse(chain.words[t]), word_parse(chain.words[t + 1]));
    rep.add(chain.name + "/line" + std::to_string(t + 1) + "=line" + std::to_string(t + 2),
            res.ok, res.ok ? "" : res.detail);
  }
  return rep;
}

// Every displayed equality in the k = 2 and k = 3 reduction chains, under Psi.
inline Report verify_prop_reductions(long long k) {
  Report rep("reductions-k" + std::to_string(k));
  for (const IdentityChain& chain : reduction_chains(k)) verify_chain(rep, chain);
  return rep;
}

}  // namespace lmod
