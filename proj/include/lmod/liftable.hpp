#pragma once

// Generating sets for the liftable subgroup at cover index k, the explicit
// free basis of ker Psi, and the constructive decomposition of a liftable
// image matrix into a witness word over {a, b, c^k, i}.

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "psi.hpp"
#include "sl2.hpp"
#include "word.hpp"

namespace lmod {

struct GenSet {
  enum class Provenance { General, Reduced, KernelBasis };

  long long k;
  Provenance provenance;
  std::vector<std::pair<std::string, TwistWord>> members;
};

inline TwistWord boundary_chain_word() {  // (b c)^6, trivial under Psi
  return word_parse("(b c)^6");
}

// The 5 + (k-1)^2 generators: a, b, c^k, i, (bc)^6 and the conjugates
// c^j b^i a (bc)^6 a^-1 b^-i c^-j for 1 <= i,j < k. Every member lifts at k;
// this is checked at construction.
inline GenSet generating_set(long long k) {
  if (k < 2) throw std::invalid_argument("generating_set: k must be >= 2");
  GenSet out{k, GenSet::Provenance::General, {}};
  out.members.emplace_back("a", word_parse("a"));
  out.members.emplace_back("b", word_parse("b"));
  out.members.emplace_back("c^" + std::to_string(k), TwistWord::letter(Letter::C, k));
  out.members.emplace_back("i", word_parse("i"));
  out.members.emplace_back("(b c)^6", boundary_chain_word());
  const TwistWord eta = boundary_chain_word();
  for (long long j = 1; j < k; ++j)
    for (long long i = 1; i < k; ++i) {
      TwistWord w;
      w.push(Letter::C, j);
      w.push(Letter::B, i);
      w.push(Letter::A, 1);
      w.append(eta);
      w.push(Letter::A, -1);
      w.push(Letter::B, -i);
      w.push(Letter::C, -j);
      out.members.emplace_back(
          "conj[i=" + std::to_string(i) + ",j=" + std::to_string(j) + "]", std::move(w));
    }
  const Cover cover(k);
  for (const auto& [label, w] : out.members)
    if (!lift_test(w, cover))
      throw std::logic_error("generating_set: member '" + label + "' fails lift test");
  return out;
}

// The reduced four-element set {a, b, c^k, i}, valid for k = 2, 3 only.
inline GenSet reduced_generating_set(long long k) {
  if (k != 2 && k != 3)
    throw std::invalid_argument("reduced_generating_set: only k = 2 and k = 3 are supported");
  GenSet out{k, GenSet::Provenance::Reduced, {}};
  out.members.emplace_back("a", word_parse("a"));
  out.members.emplace_back("b", word_parse("b"));
  out.members.emplace_back("c^" + std::to_string(k), TwistWord::letter(Letter::C, k));
  out.members.emplace_back("i", word_parse("i"));
  const Cover cover(k);
  for (const auto& [label, w] : out.members)
    if (!lift_test(w, cover))
      throw std::logic_error("reduced_generating_set: member '" + label + "' fails lift test");
  return out;
}

struct KernelWordIndex {
  long long m, n;
  bool operator==(const KernelWordIndex&) const = default;
};

// b^-n c a^-1 b^n a^m (b c)^6 a^-m b^-n a c^-1 b^n — a separating twist for
// each (m, n); all of them lie in ker Psi.
inline TwistWord kernel_word(long long m, long long n) {
  TwistWord w;
  w.push(Letter::B, -n);
  w.push(Letter::C, 1);
  w.push(Letter::A, -1);
  w.push(Letter::B, n);
  w.push(Letter::A, m);
  w.append(boundary_chain_word());
  w.push(Letter::A, -m);
  w.push(Letter::B, -n);
  w.push(Letter::A, 1);
  w.push(Letter::C, -1);
  w.push(Letter::B, n);
  return w;
}

// The (2M+1)^2 basis words with (m, n) in [-M, M]^2, row-major, m outer.
inline std::vector<std::pair<KernelWordIndex, TwistWord>> kernel_basis(long long window) {
  if (window < 0) throw std::invalid_argument("kernel_basis: window must be >= 0");
  std::vector<std::pair<KernelWordIndex, TwistWord>> out;
  out.reserve(static_cast<std::size_t>((2 * window + 1) * (2 * window + 1)));
  for (long long m = -window; m <= window; ++m)
    for (long long n = -window; n <= window; ++n)
      out.emplace_back(KernelWordIndex{m, n}, kernel_word(m, n));
  return out;
}

struct MembershipError : std::runtime_error {
  std::string condition;
  explicit MembershipError(std::string cond)
      : std::runtime_error("matrix is not in the liftable image: " + cond),
        condition(std::move(cond)) {}
};

// Witness word for X in the image of the liftable subgroup at the given
// cover: uses c only in exponents divisible by k and evaluates back to X.
//
//   1. eps = -1 is absorbed into a leading i (Psi(i) = -I);
//   2. a gcd witness B moves v to (0, l) with k | l;
//   3. Psi(c^-l) clears the third row;
//   4. the remaining SL_2 block is decomposed over {SA, SB} and embedded.
inline TwistWord decompose_lmod(const Mat3& x, const Cover& cover) {
  if (auto f = image_shape_failure(x)) throw MembershipError(shape_failure_message(*f));
  BlockForm bf = block_form(x);
  TwistWord prefix;
  Mat3 x1 = x;
  if (bf.eps == -1) {
    prefix.push(Letter::Iota, 1);
    x1 = -x;
    bf = block_form(x1);
  }
  const Int& m = bf.v.first;
  const Int& n = bf.v.second;
  if (m % cover.k != 0)
    throw MembershipError("third-row entry (3,1) = " + m.str() + " is not divisible by k = " +
                          std::to_string(cover.k));
  if (n % cover.k != 0)
    throw MembershipError("third-row entry (3,2) = " + n.str() + " is not divisible by k = " +
                          std::to_string(cover.k));

  const GcdWitness gw = gcd_sl2(m, n);
  const TwistWord embed_b = sl2_embed(sl2_decompose(gw.a));
  const Mat3 x2 = x1 * eval_psi(embed_b);
  const Int ell = x2.at(2, 1);  // = gcd(m, n) >= 0, divisible by k

  Mat3 x3 = x2;
  if (ell != 0) x3 = x2 * psi_letter(Letter::C, -ell);
  const Mat2 c_block{{x3.at(0, 0), x3.at(0, 1), x3.at(1, 0), x3.at(1, 1)}};
  const TwistWord embed_c = sl2_embed(sl2_decompose(c_block));

  // x = psi(prefix) * psi(embed_c) * psi(c^ell) * psi(embed_b)^-1
  TwistWord out = prefix;
  out.append(embed_c);
  out.push(Letter::C, ell);
  out.append(embed_b.inverse());
  return out;
}

}  // namespace lmod
