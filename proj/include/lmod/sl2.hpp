#pragma once

// Constructive SL_2(Z) utilities: the gcd witness (m,n)A = (0, gcd) and the
// decomposition of SL_2(Z) matrices into powers of
//
//   SA = [1 1; 0 1]   (upper block of Psi(a))
//   SB = [1 0; -1 1]  (upper block of Psi(b))
//
// by continued-fraction-style reduction on the first column.

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "matrix.hpp"
#include "word.hpp"

namespace lmod {

enum class Sl2Gen : std::uint8_t { SA, SB };

struct Sl2Run {
  Sl2Gen gen;
  Int exp;
  bool operator==(const Sl2Run&) const = default;
};

class Sl2Word {
 public:
  Sl2Word() = default;

  const std::vector<Sl2Run>& runs() const { return runs_; }
  bool empty() const { return runs_.empty(); }

  void push(Sl2Gen g, Int exp) {
    if (exp == 0) return;
    if (!runs_.empty() && runs_.back().gen == g) {
      runs_.back().exp += exp;
      if (runs_.back().exp == 0) runs_.pop_back();
      return;
    }
    runs_.push_back({g, std::move(exp)});
  }

  Mat2 eval() const {
    Mat2 m = Mat2::identity();
    for (const Sl2Run& r : runs_) m = m * gen_power(r.gen, r.exp);
    return m;
  }

  static Mat2 gen_power(Sl2Gen g, const Int& e) {
    return g == Sl2Gen::SA ? Mat2{{1, e, 0, 1}} : Mat2{{1, 0, -e, 1}};
  }

  std::string str() const {
    std::string s;
    for (const Sl2Run& r : runs_) {
      if (!s.empty()) s += ' ';
      s += r.gen == Sl2Gen::SA ? "SA" : "SB";
      if (r.exp != 1) s += '^' + r.exp.str();
    }
    return s;
  }

  bool operator==(const Sl2Word&) const = default;

 private:
  std::vector<Sl2Run> runs_;
};

struct GcdWitness {
  Int ell;  // gcd(m, n) >= 0, with gcd(0,0) = 0
  Mat2 a;   // det 1, (m n) * a = (0 ell)
};

// Witness A = [n/l r; -m/l s] with m*r + n*s = l. Bezout freedom is fixed by
// minimizing |r| (ties resolved toward positive r).
inline GcdWitness gcd_sl2(const Int& m, const Int& n) {
  if (m == 0 && n == 0) return {0, Mat2::identity()};
  const Int g = int_gcd(m, n);
  Int r, s;
  if (n == 0) {
    r = m > 0 ? 1 : -1;
    s = 0;
  } else {
    const ExtGcd eg = ext_gcd(int_abs(m), int_abs(n));
    r = m < 0 ? -eg.x : eg.x;
    const Int q = int_abs(n) / g;
    r %= q;
    if (r < 0) r += q;      // r in [0, q)
    if (2 * r > q) r -= q;  // r in (-q/2, q/2], tie kept positive
    s = (g - m * r) / n;
  }
  Mat2 a{{n / g, r, -(m / g), s}};
  return {g, a};
}

// Word in SA, SB evaluating exactly to c (det c must be 1). Reduction acts on
// the left: SA^-t clears the top-left entry modulo the bottom-left, SB^-t the
// reverse; -I is emitted as (SA SB SA)^2.
inline Sl2Word sl2_decompose(const Mat2& c) {
  if (c.det() != 1) throw std::domain_error("sl2_decompose: determinant must be 1");
  Sl2Word w;
  Mat2 r = c;

  auto take_sa = [&](const Int& t) {  // r <- SA^-t * r, word <- word SA^t
    w.push(Sl2Gen::SA, t);
    r.at(0, 0) -= t * r.at(1, 0);
    r.at(0, 1) -= t * r.at(1, 1);
  };
  auto take_sb = [&](const Int& t) {  // r <- SB^-t * r, word <- word SB^t
    w.push(Sl2Gen::SB, t);
    r.at(1, 0) += t * r.at(0, 0);
    r.at(1, 1) += t * r.at(0, 1);
  };
  // Nearest-integer quotient: |p - nearest(p,q)*q| <= |q|/2.
  auto nearest = [](const Int& p, const Int& q) {
    Int t = p / q;
    Int best = t;
    Int bestabs = int_abs(p - t * q);
    for (int d = -1; d <= 1; d += 2) {
      Int cand = t + d;
      Int ca = int_abs(p - cand * q);
      if (ca < bestabs || (ca == bestabs && int_abs(cand) < int_abs(best))) {
        best = cand;
        bestabs = ca;
      }
    }
    return best;
  };

  while (true) {
    const Int p = r.at(0, 0);
    const Int low = r.at(1, 0);
    if (low == 0) {
      // det = 1 forces diagonal +-1
      const Int q = r.at(0, 1);
      if (p == 1) {
        if (q != 0) take_sa(q);  // r becomes I
      } else {
        // r = [-1 q; 0 -1] = (SA SB SA)^2 * SA^-q
        for (int t = 0; t < 2; ++t) {
          w.push(Sl2Gen::SA, 1);
          w.push(Sl2Gen::SB, 1);
          w.push(Sl2Gen::SA, 1);
        }
        if (q != 0) w.push(Sl2Gen::SA, -q);
      }
      return w;
    }
    if (p == 0) {
      // |low| = 1; swap rows via S = SA SB SA = [0 1; -1 0]: r <- S^-1 r
      w.push(Sl2Gen::SA, 1);
      w.push(Sl2Gen::SB, 1);
      w.push(Sl2Gen::SA, 1);
      const Mat2 sinv{{0, -1, 1, 0}};
      r = sinv * r;
      continue;
    }
    if (int_abs(p) >= int_abs(low)) {
      take_sa(nearest(p, low));
    } else {
      take_sb(-nearest(low, p));
    }
  }
}

// SA |-> a, SB |-> b; the Psi image of the result has the word's SL2 block,
// v = (0,0) and eps = +1.
inline TwistWord sl2_embed(const Sl2Word& w) {
  TwistWord out;
  for (const Sl2Run& r : w.runs())
    out.push(r.gen == Sl2Gen::SA ? Letter::A : Letter::B, r.exp);
  return out;
}

}  // namespace lmod
