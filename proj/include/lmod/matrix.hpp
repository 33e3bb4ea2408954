#pragma once

// Exact 2x2 / 3x3 integer matrices over arbitrary-precision integers, and
// 3x3 matrices over Z_k. Entry growth along twist words is exponential, so
// machine-word arithmetic is never used for the exact types.

#include <array>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "bigint.hpp"

namespace lmod {

struct Mat2 {
  std::array<Int, 4> e{};  // row-major

  static Mat2 identity() { return Mat2{{1, 0, 0, 1}}; }

  const Int& at(int r, int c) const { return e[static_cast<std::size_t>(2 * r + c)]; }
  Int& at(int r, int c) { return e[static_cast<std::size_t>(2 * r + c)]; }

  Int det() const { return e[0] * e[3] - e[1] * e[2]; }

  Mat2 operator*(const Mat2& o) const {
    return Mat2{{e[0] * o.e[0] + e[1] * o.e[2], e[0] * o.e[1] + e[1] * o.e[3],
                 e[2] * o.e[0] + e[3] * o.e[2], e[2] * o.e[1] + e[3] * o.e[3]}};
  }

  Mat2 operator-() const { return Mat2{{-e[0], -e[1], -e[2], -e[3]}}; }

  // Inverse for det = +-1 only; stays integral.
  Mat2 inverse() const {
    const Int d = det();
    if (d != 1 && d != -1) throw std::domain_error("mat2_inverse: matrix is not unimodular");
    Mat2 adj{{e[3], -e[1], -e[2], e[0]}};
    if (d == -1)
      for (Int& x : adj.e) x = -x;
    return adj;
  }

  bool operator==(const Mat2&) const = default;

  std::string str() const {
    std::ostringstream os;
    os << "[[" << e[0] << "," << e[1] << "],[" << e[2] << "," << e[3] << "]]";
    return os.str();
  }
};

struct ResidueMat3;

struct Mat3 {
  std::array<Int, 9> e{};  // row-major

  static Mat3 identity() { return Mat3{{1, 0, 0, 0, 1, 0, 0, 0, 1}}; }

  const Int& at(int r, int c) const { return e[static_cast<std::size_t>(3 * r + c)]; }
  Int& at(int r, int c) { return e[static_cast<std::size_t>(3 * r + c)]; }

  Mat3 operator*(const Mat3& o) const {
    Mat3 out;
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c)
        out.at(r, c) = at(r, 0) * o.at(0, c) + at(r, 1) * o.at(1, c) + at(r, 2) * o.at(2, c);
    return out;
  }

  Mat3 operator-() const {
    Mat3 out;
    for (int t = 0; t < 9; ++t) out.e[static_cast<std::size_t>(t)] = -e[static_cast<std::size_t>(t)];
    return out;
  }

  Int det() const {
    return at(0, 0) * (at(1, 1) * at(2, 2) - at(1, 2) * at(2, 1)) -
           at(0, 1) * (at(1, 0) * at(2, 2) - at(1, 2) * at(2, 0)) +
           at(0, 2) * (at(1, 0) * at(2, 1) - at(1, 1) * at(2, 0));
  }

  // Inverse via adjugate; defined only for det = +-1.
  Mat3 inverse() const {
    const Int d = det();
    if (d != 1 && d != -1) throw std::domain_error("mat3_inverse: matrix is not unimodular");
    Mat3 adj;
    auto cof = [&](int r, int c) {
      const int r0 = (r + 1) % 3, r1 = (r + 2) % 3;
      const int c0 = (c + 1) % 3, c1 = (c + 2) % 3;
      return at(r0, c0) * at(r1, c1) - at(r0, c1) * at(r1, c0);
    };
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) adj.at(r, c) = cof(c, r);  // transpose of cofactors
    if (d == -1)
      for (Int& x : adj.e) x = -x;
    return adj;
  }

  Mat3 pow(long long n) const {
    if (n < 0) return inverse().pow(-n);
    Mat3 out = identity();
    Mat3 base = *this;
    while (n > 0) {
      if (n & 1) out = out * base;
      base = base * base;
      n >>= 1;
    }
    return out;
  }

  bool operator==(const Mat3&) const = default;

  // Text format: nine integers, row-major, comma- or whitespace-separated.
  static Mat3 from_text(std::string_view text);
  std::string to_text() const {
    std::ostringstream os;
    for (int r = 0; r < 3; ++r) {
      for (int c = 0; c < 3; ++c) {
        if (c) os << ' ';
        os << at(r, c);
      }
      os << '\n';
    }
    return os.str();
  }

  ResidueMat3 mod(long long k) const;
};

inline Mat3 Mat3::from_text(std::string_view text) {
  Mat3 out;
  std::size_t pos = 0;
  for (int t = 0; t < 9; ++t) {
    while (pos < text.size() &&
           (text[pos] == ' ' || text[pos] == ',' || text[pos] == '\t' || text[pos] == '\n' ||
            text[pos] == '\r'))
      ++pos;
    std::size_t start = pos;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
    if (pos == start || (pos - start == 1 && (text[start] == '-' || text[start] == '+')))
      throw std::invalid_argument("matrix text: expected 9 integers");
    out.e[static_cast<std::size_t>(t)] = Int(std::string(text.substr(start, pos - start)));
  }
  while (pos < text.size()) {
    if (text[pos] != ' ' && text[pos] != ',' && text[pos] != '\t' && text[pos] != '\n' &&
        text[pos] != '\r')
      throw std::invalid_argument("matrix text: trailing garbage");
    ++pos;
  }
  return out;
}

// 3x3 matrix over Z_k, entries kept in [0, k).
struct ResidueMat3 {
  long long k = 0;
  std::array<long long, 9> e{};

  static constexpr long long kMaxModulus = 1'000'000'000;  // keeps products in int64

  static void check_modulus(long long k) {
    if (k < 2) throw std::invalid_argument("residue modulus must be >= 2");
    if (k > kMaxModulus) throw std::invalid_argument("residue modulus too large");
  }

  static ResidueMat3 identity(long long k) {
    check_modulus(k);
    ResidueMat3 m;
    m.k = k;
    m.e = {1 % k, 0, 0, 0, 1 % k, 0, 0, 0, 1 % k};
    return m;
  }

  const long long& at(int r, int c) const { return e[static_cast<std::size_t>(3 * r + c)]; }
  long long& at(int r, int c) { return e[static_cast<std::size_t>(3 * r + c)]; }

  ResidueMat3 operator*(const ResidueMat3& o) const {
    if (k != o.k) throw std::invalid_argument("residue matrix product: modulus mismatch");
    ResidueMat3 out;
    out.k = k;
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) {
        long long s = 0;
        for (int t = 0; t < 3; ++t) s += at(r, t) * o.at(t, c);
        out.at(r, c) = s % k;
      }
    return out;
  }

  long long det_mod() const {
    auto m2 = [&](long long x) {
      long long r = x % k;
      return r < 0 ? r + k : r;
    };
    long long d = at(0, 0) * m2(at(1, 1) * at(2, 2) - at(1, 2) * at(2, 1)) +
                  at(0, 1) * m2(at(1, 2) * at(2, 0) - at(1, 0) * at(2, 2)) +
                  at(0, 2) * m2(at(1, 0) * at(2, 1) - at(1, 1) * at(2, 0));
    return m2(d);
  }

  bool invertible() const {
    long long d = det_mod();
    long long g = k;
    while (d != 0) {
      long long t = g % d;
      g = d;
      d = t;
    }
    return g == 1;
  }

  bool operator==(const ResidueMat3&) const = default;

  // Row-major base-k packing; collision-free. Requires k^9 < 2^64.
  std::uint64_t pack_key() const {
    unsigned __int128 key = 0;
    for (int t = 0; t < 9; ++t) {
      key = key * static_cast<unsigned __int128>(k) +
            static_cast<unsigned __int128>(e[static_cast<std::size_t>(t)]);
      if (key > ~static_cast<std::uint64_t>(0))
        throw std::domain_error("pack_key: modulus too large for packed keys");
    }
    return static_cast<std::uint64_t>(key);
  }

  std::string to_text() const {
    std::ostringstream os;
    for (int r = 0; r < 3; ++r) {
      for (int c = 0; c < 3; ++c) {
        if (c) os << ' ';
        os << at(r, c);
      }
      os << '\n';
    }
    return os.str();
  }
};

inline ResidueMat3 Mat3::mod(long long k) const {
  ResidueMat3::check_modulus(k);
  ResidueMat3 out;
  out.k = k;
  for (int t = 0; t < 9; ++t) {
    Int r = e[static_cast<std::size_t>(t)] % k;
    if (r < 0) r += k;
    out.e[static_cast<std::size_t>(t)] = r.convert_to<long long>();
  }
  return out;
}

inline ResidueMat3 mat3_mod(const Mat3& m, long long k) { return m.mod(k); }
inline Mat3 mat3_multiply(const Mat3& m, const Mat3& n) { return m * n; }
inline Mat3 mat3_inverse(const Mat3& m) { return m.inverse(); }

}  // namespace lmod
