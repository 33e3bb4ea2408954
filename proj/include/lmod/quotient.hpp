#pragma once

// Finite computations over Z_k: breadth-first closure of residue matrix
// groups, coset tables for the liftable subgroup, Schreier-element
// cross-checks, and the maximality decision via coset-representative
// adjunction.
//
// Closure is breadth-first from the identity, multiplying on the right by
// generators in a fixed order, so element enumeration order is deterministic
// (and independent of LMOD_THREADS, which only splits the product batches).

#include <array>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_set>
#include <utility>
#include <vector>

#include "liftable.hpp"
#include "psi.hpp"
#include "report.hpp"
#include "word.hpp"

namespace lmod {

inline unsigned closure_thread_count() {
  if (const char* env = std::getenv("LMOD_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 1 && v <= 64) return static_cast<unsigned>(v);
  }
  return 1;
}

struct FiniteGroup {
  long long k = 0;
  std::vector<std::pair<std::string, ResidueMat3>> generators;
  std::vector<ResidueMat3> elements;  // BFS order; elements[0] is the identity
  bool truncated = false;             // enumeration stopped at the order bound

  std::size_t order() const { return elements.size(); }

  bool contains(const ResidueMat3& m) const {
    if (m.k != k) return false;
    return keys_.count(m.pack_key()) != 0;
  }

  std::unordered_set<std::uint64_t> keys_;
};

// Subgroup generated by `gens` (all same modulus, all invertible mod k).
// With `stop_above` set, enumeration stops once more elements than the bound
// have been found and the result is marked truncated.
inline FiniteGroup closure(long long k,
                           std::vector<std::pair<std::string, ResidueMat3>> gens,
                           std::optional<std::size_t> stop_above = std::nullopt) {
  ResidueMat3::check_modulus(k);
  for (const auto& [label, g] : gens) {
    if (g.k != k)
      throw std::invalid_argument("closure: generator '" + label + "' has modulus " +
                                  std::to_string(g.k) + ", expected " + std::to_string(k));
    if (!g.invertible())
      throw std::invalid_argument("closure: generator '" + label + "' is not invertible mod " +
                                  std::to_string(k));
  }

  FiniteGroup group;
  group.k = k;
  group.generators = std::move(gens);

  const ResidueMat3 id = ResidueMat3::identity(k);
  group.elements.push_back(id);
  group.keys_.insert(id.pack_key());

  const std::size_t ngens = group.generators.size();
  std::vector<std::size_t> frontier{0};
  const unsigned nthreads = closure_thread_count();

  while (!frontier.empty() && !group.truncated) {
    // products of the whole frontier, in (frontier, generator) order
    std::vector<ResidueMat3> products(frontier.size() * ngens);
    auto worker = [&](std::size_t lo, std::size_t hi) {
      for (std::size_t t = lo; t < hi; ++t) {
        const ResidueMat3& x = group.elements[frontier[t]];
        for (std::size_t g = 0; g < ngens; ++g)
          products[t * ngens + g] = x * group.generators[g].second;
      }
    };
    if (nthreads <= 1 || frontier.size() < 2 * nthreads) {
      worker(0, frontier.size());
    } else {
      std::vector<std::thread> pool;
      const std::size_t chunk = (frontier.size() + nthreads - 1) / nthreads;
      for (unsigned t = 0; t < nthreads; ++t) {
        const std::size_t lo = t * chunk;
        const std::size_t hi = std::min(frontier.size(), lo + chunk);
        if (lo < hi) pool.emplace_back(worker, lo, hi);
      }
      for (std::thread& th : pool) th.join();
    }

    std::vector<std::size_t> next;
    for (const ResidueMat3& p : products) {
      const std::uint64_t key = p.pack_key();
      if (group.keys_.insert(key).second) {
        group.elements.push_back(p);
        next.push_back(group.elements.size() - 1);
        if (stop_above && group.elements.size() > *stop_above) {
          group.truncated = true;
          break;
        }
      }
    }
    frontier = std::move(next);
  }
  return group;
}

inline std::vector<std::pair<std::string, ResidueMat3>> psi_mod_generators(long long k) {
  return {{"a", eval_psi_mod(word_parse("a"), k)},
          {"b", eval_psi_mod(word_parse("b"), k)},
          {"c", eval_psi_mod(word_parse("c"), k)},
          {"i", eval_psi_mod(word_parse("i"), k)}};
}

inline std::vector<std::pair<std::string, ResidueMat3>> lmod_mod_generators(long long k) {
  return {{"a", eval_psi_mod(word_parse("a"), k)},
          {"b", eval_psi_mod(word_parse("b"), k)},
          {"c^" + std::to_string(k), eval_psi_mod(TwistWord::letter(Letter::C, k), k)},
          {"i", eval_psi_mod(word_parse("i"), k)}};
}

// The full mod-k image of Psi.
inline FiniteGroup psi_mod_group(long long k) { return closure(k, psi_mod_generators(k)); }

// The mod-k image of the liftable subgroup: block-diagonal [A 0; 0 +-1].
inline FiniteGroup lmod_subgroup(long long k) { return closure(k, lmod_mod_generators(k)); }

// Independent order oracle: closure of {SA, SB} over 2x2 residues.
inline std::size_t sl2_group_order(long long k) {
  ResidueMat3::check_modulus(k);
  auto red = [&](long long x) {
    long long r = x % k;
    return r < 0 ? r + k : r;
  };
  using M2 = std::array<long long, 4>;
  auto mul = [&](const M2& x, const M2& y) {
    return M2{red(x[0] * y[0] + x[1] * y[2]), red(x[0] * y[1] + x[1] * y[3]),
              red(x[2] * y[0] + x[3] * y[2]), red(x[2] * y[1] + x[3] * y[3])};
  };
  auto key = [&](const M2& x) {
    unsigned __int128 v = 0;
    for (long long e : x) v = v * static_cast<unsigned __int128>(k) + static_cast<unsigned __int128>(e);
    if (v > ~static_cast<std::uint64_t>(0)) throw std::domain_error("sl2_group_order: modulus too large");
    return static_cast<std::uint64_t>(v);
  };
  const M2 sa{1, 1 % k, 0, 1};
  const M2 sb{1, 0, red(-1), 1};
  const M2 id{1 % k, 0, 0, 1 % k};
  std::unordered_set<std::uint64_t> seen{key(id)};
  std::vector<M2> elems{id};
  for (std::size_t qi = 0; qi < elems.size(); ++qi) {
    const M2 x = elems[qi];
    for (const M2& g : {sa, sb}) {
      const M2 y = mul(x, g);
      if (seen.insert(key(y)).second) elems.push_back(y);
    }
  }
  return elems.size();
}

// Right cosets of the liftable image in the full image, indexed by the word
// parameters (m, n) of the representatives (b^-1 a^-1 c b)^m (a^-1 c)^n.
struct CosetTable {
  long long k = 0;
  std::vector<TwistWord> reps;                   // index m*k + n; reps[0] empty
  std::vector<std::array<std::size_t, 4>> action;  // per coset, images under a,b,c,i
  std::string subgroup;

  std::size_t size() const { return reps.size(); }
};

inline TwistWord coset_rep_word(long long m, long long n) {
  return word_parse("b^-1 a^-1 c b").pow(m) * word_parse("a^-1 c").pow(n);
}

// Index of the coset containing x: x = [A 0; v e] lies in H * rep(m,n)
// exactly when (-m, m+n) = e*v mod k.
inline std::size_t coset_of(const ResidueMat3& x, long long k) {
  const long long corner = x.at(2, 2);
  if (corner != 1 % k && corner != k - 1)
    throw std::logic_error("coset_of: matrix is not an image element");
  long long u1 = x.at(2, 0), u2 = x.at(2, 1);
  if (corner != 1 % k) {  // eps = -1: flip sign of v
    u1 = (k - u1) % k;
    u2 = (k - u2) % k;
  }
  const long long m = (k - u1) % k;
  const long long n = ((u2 - m) % k + k) % k;
  return static_cast<std::size_t>(m * k + n);
}

struct CosetIndexResult {
  std::size_t index = 0;
  CosetTable table;
  std::size_t order_full = 0;
  std::size_t order_liftable = 0;
};

inline CosetIndexResult coset_index(long long k) {
  if (k < 2) throw std::invalid_argument("coset_index: k must be >= 2");
  CosetIndexResult out;
  const FiniteGroup full = psi_mod_group(k);
  const FiniteGroup lift = lmod_subgroup(k);
  out.order_full = full.order();
  out.order_liftable = lift.order();
  if (full.order() % lift.order() != 0)
    throw std::logic_error("coset_index: subgroup order does not divide group order");
  out.index = full.order() / lift.order();

  CosetTable& t = out.table;
  t.k = k;
  t.subgroup = "liftable image mod " + std::to_string(k) + " (third row (0, 0, +-1))";
  t.reps.reserve(static_cast<std::size_t>(k * k));
  for (long long m = 0; m < k; ++m)
    for (long long n = 0; n < k; ++n) t.reps.push_back(coset_rep_word(m, n));

  const std::array<TwistWord, 4> gens{word_parse("a"), word_parse("b"), word_parse("c"),
                                      word_parse("i")};
  t.action.resize(t.reps.size());
  for (std::size_t c = 0; c < t.reps.size(); ++c) {
    const ResidueMat3 rep = eval_psi_mod(t.reps[c], k);
    for (std::size_t g = 0; g < gens.size(); ++g)
      t.action[c][g] = coset_of(rep * eval_psi_mod(gens[g], k), k);
  }
  return out;
}

// Schreier elements r * s * rep(r s)^-1 for every coset representative r and
// ambient generator s, evaluated in exact integers: each must land in the
// liftable image and round-trip through decompose_lmod.
inline Report schreier_check(long long k) {
  Report rep("schreier-k" + std::to_string(k));
  const CosetIndexResult ci = coset_index(k);
  const Cover cover(k);
  const std::array<std::pair<char, TwistWord>, 4> gens{
      std::pair{'a', word_parse("a")}, std::pair{'b', word_parse("b")},
      std::pair{'c', word_parse("c")}, std::pair{'i', word_parse("i")}};
  for (long long m = 0; m < k; ++m)
    for (long long n = 0; n < k; ++n) {
      const std::size_t c = static_cast<std::size_t>(m * k + n);
      for (std::size_t g = 0; g < gens.size(); ++g) {
        const std::size_t target = ci.table.action[c][g];
        const TwistWord word =
            ci.table.reps[c] * gens[g].second * ci.table.reps[target].inverse();
        const std::string id = "schreier/m=" + std::to_string(m) + ",n=" + std::to_string(n) +
                               ",gen=" + gens[g].first;
        const Mat3 x = eval_psi(word);
        if (!in_image_lmod(x, cover)) {
          rep.add(id, false, "Schreier element is not in the liftable image");
          continue;
        }
        bool roundtrip = false;
        std::string note;
        try {
          const TwistWord witness = decompose_lmod(x, cover);
          roundtrip = eval_psi(witness) == x;
          if (!roundtrip) note = "decomposition word evaluates to a different matrix";
        } catch (const std::exception& e) {
          note = e.what();
        }
        rep.add(id, roundtrip, note);
      }
    }
  return rep;
}

inline long long smallest_prime_factor(long long n) {
  for (long long p = 2; p * p <= n; ++p)
    if (n % p == 0) return p;
  return n;
}

inline bool is_prime(long long n) { return n >= 2 && smallest_prime_factor(n) == n; }

struct MaximalityResult {
  long long k = 0;
  bool maximal = false;
  std::string detail;
  // Composite witness: the intermediate subgroup generated by {a, b, c^ell, i}.
  std::optional<long long> witness_ell;
  std::optional<std::size_t> witness_order;
  std::size_t order_full = 0;
  std::size_t order_liftable = 0;
};

// Maximality of the liftable subgroup, decided in the mod-k quotient.
// For prime k, every nontrivial coset representative must generate the full
// group together with the subgroup (adjunction closures are cut short once
// they exceed the largest possible proper order). For composite k the
// subgroup generated by {a, b, c^ell, i} for any proper divisor ell is
// strictly intermediate; the smallest prime factor is used as witness.
inline MaximalityResult is_maximal(long long k) {
  if (k < 2) throw std::invalid_argument("is_maximal: k must be >= 2");
  MaximalityResult out;
  out.k = k;
  const FiniteGroup full = psi_mod_group(k);
  const FiniteGroup lift = lmod_subgroup(k);
  out.order_full = full.order();
  out.order_liftable = lift.order();

  if (!is_prime(k)) {
    const long long ell = smallest_prime_factor(k);
    auto kgens = lmod_mod_generators(k);
    kgens[2] = {"c^" + std::to_string(ell),
                eval_psi_mod(TwistWord::letter(Letter::C, ell), k)};
    const FiniteGroup between = closure(k, kgens);
    const ResidueMat3 c_ell = eval_psi_mod(TwistWord::letter(Letter::C, ell), k);
    const ResidueMat3 c_one = eval_psi_mod(word_parse("c"), k);
    const bool strict_lower = !lift.contains(c_ell) && between.order() > lift.order();
    const bool strict_upper = !between.contains(c_one) && between.order() < full.order();
    bool contains_lift = true;
    for (const auto& [label, g] : lmod_mod_generators(k))
      contains_lift = contains_lift && between.contains(g);
    if (!(strict_lower && strict_upper && contains_lift))
      throw std::logic_error("is_maximal: intermediate witness failed strictness checks at k = " +
                             std::to_string(k));
    out.maximal = false;
    out.witness_ell = ell;
    out.witness_order = between.order();
    out.detail = "not maximal: <a, b, c^" + std::to_string(ell) + ", i> mod " +
                 std::to_string(k) + " is strictly intermediate, orders " +
                 std::to_string(lift.order()) + " < " + std::to_string(between.order()) +
                 " < " + std::to_string(full.order());
    return out;
  }

  // Largest proper subgroup containing the liftable image has order at most
  // |G| / p for the smallest prime p | k^2.
  const std::size_t bound = full.order() / static_cast<std::size_t>(smallest_prime_factor(k));
  std::size_t generated_full = 0;
  for (long long m = 0; m < k; ++m)
    for (long long n = 0; n < k; ++n) {
      if (m == 0 && n == 0) continue;
      auto gens = lmod_mod_generators(k);
      gens.emplace_back("h[m=" + std::to_string(m) + ",n=" + std::to_string(n) + "]",
                        eval_psi_mod(coset_rep_word(m, n), k));
      const FiniteGroup adj = closure(k, std::move(gens), bound);
      const bool reaches_full = adj.truncated || adj.order() == full.order();
      if (reaches_full) ++generated_full;
    }
  const std::size_t needed = static_cast<std::size_t>(k * k - 1);
  out.maximal = generated_full == needed;
  out.detail = out.maximal
                   ? "maximal: all " + std::to_string(needed) +
                         " nontrivial coset adjunctions generate the full group"
                   : "not maximal: only " + std::to_string(generated_full) + " of " +
                         std::to_string(needed) + " coset adjunctions generate the full group";
  return out;
}

}  // namespace lmod
