#pragma once

// The homology representation Psi: Mod(S_{1,2}) -> GL_3(Z) on twist words,
// its mod-k reductions, and membership tests for the characterized images.
//
// Generator images (rows act on the right, so Psi(xy) = Psi(x) * Psi(y)):
//
//   Psi(a) = [1 1 0; 0 1 0; 0 0 1]     Psi(c) = [1 1 0; 0 1 0; 0 1 1]
//   Psi(b) = [1 0 0; -1 1 0; 0 0 1]    Psi(i) = -I
//
// Every image has block shape [A 0; v e] with A in SL_2(Z), v in Z^2 and
// e = +-1; the word lifts under the k-sheeted cyclic cover exactly when
// both entries of v are divisible by k.

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "matrix.hpp"
#include "word.hpp"

namespace lmod {

// The k-sheeted cyclic branched cover of the twice-marked torus, induced by
// the homology functional sending n1*c1 + n2*c2 + n3*c3 to n3 mod k.
struct Cover {
  long long k;
  static constexpr std::array<int, 3> eta_coefficients{0, 0, 1};

  explicit Cover(long long k_) : k(k_) {
    if (k < 2) throw std::invalid_argument("cover index k must be >= 2");
  }
};

// Psi of a single letter power, in closed form.
inline Mat3 psi_letter(Letter sym, const Int& e) {
  switch (sym) {
    case Letter::A: return Mat3{{1, e, 0, 0, 1, 0, 0, 0, 1}};
    case Letter::B: return Mat3{{1, 0, 0, -e, 1, 0, 0, 0, 1}};
    case Letter::C: return Mat3{{1, e, 0, 0, 1, 0, 0, e, 1}};
    case Letter::Iota: return (e % 2 == 0) ? Mat3::identity() : -Mat3::identity();
  }
  throw std::logic_error("bad letter");
}

inline Mat3 eval_psi(const TwistWord& w) {
  Mat3 m = Mat3::identity();
  for (const Run& r : w.runs()) m = m * psi_letter(r.sym, r.exp);
  return m;
}

// Same product computed directly in residues.
inline ResidueMat3 eval_psi_mod(const TwistWord& w, long long k) {
  ResidueMat3::check_modulus(k);
  auto red = [&](long long x) {
    long long r = x % k;
    return r < 0 ? r + k : r;
  };
  ResidueMat3 m = ResidueMat3::identity(k);
  for (const Run& r : w.runs()) {
    const long long e = red((r.exp % k).convert_to<long long>());
    ResidueMat3 g = ResidueMat3::identity(k);
    switch (r.sym) {
      case Letter::A: g.at(0, 1) = e; break;
      case Letter::B: g.at(1, 0) = red(-e); break;
      case Letter::C: g.at(0, 1) = e; g.at(2, 1) = e; break;
      case Letter::Iota:
        if (r.exp % 2 != 0)
          for (int t = 0; t < 9; ++t)
            g.e[static_cast<std::size_t>(t)] = red(-g.e[static_cast<std::size_t>(t)]);
        break;
    }
    m = m * g;
  }
  return m;
}

enum class ShapeFailure { ThirdColumn, CornerNotUnit, BlockNotSl2 };

inline std::string shape_failure_message(ShapeFailure f) {
  switch (f) {
    case ShapeFailure::ThirdColumn: return "entries (1,3) and (2,3) must be 0";
    case ShapeFailure::CornerNotUnit: return "entry (3,3) must be +1 or -1";
    case ShapeFailure::BlockNotSl2: return "upper-left 2x2 block must have determinant 1";
  }
  return "unknown shape failure";
}

struct ShapeError : std::runtime_error {
  ShapeFailure kind;
  explicit ShapeError(ShapeFailure f)
      : std::runtime_error("matrix is not in the image of Psi: " + shape_failure_message(f)),
        kind(f) {}
};

// The decomposition [A 0; v e] of an image matrix.
struct BlockForm {
  Mat2 a;
  std::pair<Int, Int> v;
  int eps;  // +1 or -1

  Mat3 reassemble() const {
    Mat3 m;
    m.at(0, 0) = a.at(0, 0);
    m.at(0, 1) = a.at(0, 1);
    m.at(1, 0) = a.at(1, 0);
    m.at(1, 1) = a.at(1, 1);
    m.at(2, 0) = v.first;
    m.at(2, 1) = v.second;
    m.at(2, 2) = eps;
    return m;
  }

  std::string str() const {
    std::ostringstream os;
    os << "A=" << a.str() << " v=(" << v.first << "," << v.second << ") eps="
       << (eps > 0 ? "+1" : "-1");
    return os.str();
  }
};

inline std::optional<ShapeFailure> image_shape_failure(const Mat3& m) {
  if (m.at(0, 2) != 0 || m.at(1, 2) != 0) return ShapeFailure::ThirdColumn;
  if (m.at(2, 2) != 1 && m.at(2, 2) != -1) return ShapeFailure::CornerNotUnit;
  const Int d = m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0);
  if (d != 1) return ShapeFailure::BlockNotSl2;
  return std::nullopt;
}

inline BlockForm block_form(const Mat3& m) {
  if (auto f = image_shape_failure(m)) throw ShapeError(*f);
  BlockForm bf;
  bf.a = Mat2{{m.at(0, 0), m.at(0, 1), m.at(1, 0), m.at(1, 1)}};
  bf.v = {m.at(2, 0), m.at(2, 1)};
  bf.eps = m.at(2, 2) == 1 ? 1 : -1;
  return bf;
}

inline bool in_image_mod(const Mat3& m) { return !image_shape_failure(m).has_value(); }

// Divisibility is checked on the exact integers, never on residues.
inline bool in_image_lmod(const Mat3& m, const Cover& cover) {
  if (!in_image_mod(m)) return false;
  return m.at(2, 0) % cover.k == 0 && m.at(2, 1) % cover.k == 0;
}

inline bool lift_test(const TwistWord& w, const Cover& cover) {
  return in_image_lmod(eval_psi(w), cover);
}

}  // namespace lmod
