#pragma once

// Named verification suites behind `verify --suite <name>`. Each suite
// returns a Report; randomized suites use fixed seeds so runs are
// reproducible bit for bit.

#include <chrono>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "identities.hpp"
#include "liftable.hpp"
#include "psi.hpp"
#include "quotient.hpp"
#include "report.hpp"
#include "rewrite.hpp"
#include "sl2.hpp"
#include "word.hpp"

namespace lmod {

struct SuiteOptions {
  long long k = 0;          // 0 = suite default
  long long window = 5;     // kernel enumeration window
  std::string script_path;  // empty = data directory default
  unsigned cases = 1000;    // randomized case count
};

inline std::string default_script_path(const std::string& name) {
#ifdef LMOD_DATA_DIR
  return std::string(LMOD_DATA_DIR) + "/" + name;
#else
  return "data/" + name;
#endif
}

// Deterministic reduced word: `runs` runs over {a,b,c} (plus i when allowed)
// with exponents in [-3, 3] \ {0}.
inline TwistWord random_word(std::mt19937_64& rng, int runs, bool with_iota = true) {
  std::uniform_int_distribution<int> sym(0, with_iota ? 3 : 2);
  std::uniform_int_distribution<int> exp(1, 3);
  std::uniform_int_distribution<int> sign(0, 1);
  TwistWord w;
  for (int t = 0; t < runs; ++t) {
    const Letter l = static_cast<Letter>(sym(rng));
    const int e = exp(rng) * (sign(rng) ? 1 : -1);
    w.push(l, e);
  }
  return w;
}

// --- relations: rule table sanity plus Psi invariance of random rewrites ---
inline Report suite_relations(const SuiteOptions& opt) {
  Report rep("relations");
  for (const RewriteRule& r : rule_table())
    rep.add("relations/rule-" + rule_name(r.id) + "-psi", eval_psi(r.lhs) == eval_psi(r.rhs),
            r.lhs.str() + " = " + r.rhs.str());
  const std::array<std::pair<std::string, std::string>, 3> braid_pairs{
      std::pair{std::string("a b a"), std::string("b a b")},
      std::pair{std::string("b c b"), std::string("c b c")},
      std::pair{std::string("a c"), std::string("c a")}};
  for (const auto& [l, r] : braid_pairs)
    rep.add("relations/image-" + l, eval_psi(word_parse(l)) == eval_psi(word_parse(r)),
            "Psi(" + l + ") = Psi(" + r + ")");

  std::mt19937_64 rng(0x5eed0001);
  unsigned applied = 0, preserved = 0;
  std::uniform_int_distribution<std::size_t> rule_pick(0, rule_table().size() - 1);
  std::uniform_int_distribution<int> dir_pick(0, 1);
  while (applied < opt.cases) {
    const TwistWord w = random_word(rng, 12);
    const RewriteRule& r = rule_table()[rule_pick(rng)];
    const Direction dir = dir_pick(rng) ? Direction::Forward : Direction::Backward;
    const std::vector<std::size_t> positions = rewrite_matches(w, r, dir);
    if (positions.empty()) continue;
    std::uniform_int_distribution<std::size_t> pos_pick(0, positions.size() - 1);
    const TwistWord out = rewrite_apply(w, r, positions[pos_pick(rng)], dir);
    ++applied;
    if (eval_psi(out) == eval_psi(w)) ++preserved;
  }
  rep.add("relations/random-rewrites-preserve-psi", preserved == applied,
          std::to_string(preserved) + "/" + std::to_string(applied));
  return rep;
}

// --- eq1 ---
inline Report suite_eq1(const SuiteOptions&) {
  Report rep("eq1");
  verify_chain(rep, eq1_chain());
  return rep;
}

// --- eq2: psi equalities plus the shipped rewrite scripts ---
inline Report suite_eq2(const SuiteOptions& opt) {
  Report rep("eq2");
  verify_chain(rep, eq2_chain());
  rep.add("eq2/psi-(c^3 b)^3",
          verify_identity_psi(word_parse("(b c)^6"), word_parse("(c^3 b)^3")).ok, "");

  const std::string path =
      opt.script_path.empty() ? default_script_path("eq2_braid_moves.script") : opt.script_path;
  std::ifstream in(path);
  if (!in) {
    rep.add("eq2/script-replay", false, "cannot open script " + path);
    return rep;
  }
  const std::vector<ScriptStep> steps = parse_script(in);
  const IdentityResult res =
      verify_identity_script(word_parse("(b c)^6"), word_parse("(c^2 b)^4"), steps);
  rep.add("eq2/script-replay", res.ok, res.detail);

  const std::string ext_path = opt.script_path.empty()
                                   ? default_script_path("c2b4_to_c3b3.script")
                                   : opt.script_path;
  if (opt.script_path.empty()) {
    std::ifstream ein(ext_path);
    if (!ein) {
      rep.add("eq2/script-replay-c3b3", false, "cannot open script " + ext_path);
      return rep;
    }
    const IdentityResult eres = verify_identity_script(
        word_parse("(c^2 b)^4"), word_parse("(c^3 b)^3"), parse_script(ein));
    rep.add("eq2/script-replay-c3b3", eres.ok, eres.detail);
  }
  return rep;
}

// --- prop42: the k = 2 and k = 3 reduction chains ---
inline Report suite_prop42(const SuiteOptions&) {
  Report rep("prop42");
  for (long long k : {2, 3})
    rep.append_prefixed("k" + std::to_string(k) + "/", verify_prop_reductions(k));
  return rep;
}

// --- kernel: enumerated basis words evaluate to the identity ---
inline Report suite_kernel(const SuiteOptions& opt) {
  Report rep("kernel");
  rep.add("kernel/(b c)^6", eval_psi(boundary_chain_word()) == Mat3::identity(), "");
  for (const auto& [idx, w] : kernel_basis(opt.window)) {
    const bool ok = eval_psi(w) == Mat3::identity();
    rep.add("kernel/m=" + std::to_string(idx.m) + ",n=" + std::to_string(idx.n), ok,
            ok ? "" : "Psi image differs from the identity");
  }
  return rep;
}

// --- paper-matrices: generator images and the displayed product fixtures ---
inline Report suite_paper_matrices(const SuiteOptions&) {
  Report rep("paper-matrices");
  rep.add("gen/a", eval_psi(word_parse("a")) == Mat3{{1, 1, 0, 0, 1, 0, 0, 0, 1}}, "");
  rep.add("gen/b", eval_psi(word_parse("b")) == Mat3{{1, 0, 0, -1, 1, 0, 0, 0, 1}}, "");
  rep.add("gen/c", eval_psi(word_parse("c")) == Mat3{{1, 1, 0, 0, 1, 0, 0, 1, 1}}, "");
  rep.add("gen/i", eval_psi(word_parse("i")) == -Mat3::identity(), "");

  // Psi(c^m b c^n) = [-m+1, m-mn+n, 0; -1, -n+1, 0; -m, m-mn+n, 1]
  bool all = true;
  for (long long m = -5; m <= 5 && all; ++m)
    for (long long n = -5; n <= 5 && all; ++n) {
      TwistWord w;
      w.push(Letter::C, m);
      w.push(Letter::B, 1);
      w.push(Letter::C, n);
      const Int mm = m, nn = n;
      const Mat3 want{{-mm + 1, mm - mm * nn + nn, 0, -1, -nn + 1, 0, -mm, mm - mm * nn + nn, 1}};
      all = eval_psi(w) == want;
    }
  rep.add("family/c^m-b-c^n", all, "m, n in [-5, 5]");

  // Psi(c^j b^K c^-j) = [1-Kj, Kj^2, 0; -K, 1+Kj, 0; -Kj, Kj^2, 1]
  all = true;
  for (long long K = 2; K <= 6 && all; ++K)
    for (long long j = 0; j < K && all; ++j) {
      TwistWord w;
      w.push(Letter::C, j);
      w.push(Letter::B, K);
      w.push(Letter::C, -j);
      const Int kk = K, jj = j;
      const Mat3 want{{1 - kk * jj, kk * jj * jj, 0, -kk, 1 + kk * jj, 0, -kk * jj,
                       kk * jj * jj, 1}};
      all = eval_psi(w) == want;
    }
  rep.add("family/c^j-b^K-c^-j", all, "K in [2, 6], j in [0, K)");

  rep.add("rep/a^-1-c",
          eval_psi(word_parse("a^-1 c")) == Mat3{{1, 0, 0, 0, 1, 0, 0, 1, 1}}, "");
  rep.add("rep/b^-1-a^-1-c-b",
          eval_psi(word_parse("b^-1 a^-1 c b")) == Mat3{{1, 0, 0, 0, 1, 0, -1, 1, 1}}, "");
  return rep;
}

// --- schreier ---
inline Report suite_schreier(const SuiteOptions& opt) {
  if (opt.k >= 2) return schreier_check(opt.k);
  Report rep("schreier");
  for (long long k : {2, 3, 4, 5})
    rep.append_prefixed("k" + std::to_string(k) + "/", schreier_check(k));
  return rep;
}

inline std::vector<std::string> suite_names() {
  return {"relations", "eq1", "eq2", "prop42", "kernel", "paper-matrices", "schreier"};
}

inline Report run_suite(const std::string& name, const SuiteOptions& opt) {
  const auto t0 = std::chrono::steady_clock::now();
  Report rep("invalid");
  if (name == "relations")
    rep = suite_relations(opt);
  else if (name == "eq1")
    rep = suite_eq1(opt);
  else if (name == "eq2")
    rep = suite_eq2(opt);
  else if (name == "prop42")
    rep = suite_prop42(opt);
  else if (name == "kernel")
    rep = suite_kernel(opt);
  else if (name == "paper-matrices")
    rep = suite_paper_matrices(opt);
  else if (name == "schreier")
    rep = suite_schreier(opt);
  else
    throw std::invalid_argument("unknown suite '" + name + "'");
  const auto t1 = std::chrono::steady_clock::now();
  rep.set_wall_ms(std::chrono::duration<double, std::milli>(t1 - t0).count());
  return rep;
}

}  // namespace lmod
