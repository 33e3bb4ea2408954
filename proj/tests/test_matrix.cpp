#include <catch2/catch_amalgamated.hpp>

#include <lmod/matrix.hpp>

using namespace lmod;

TEST_CASE("mat3 multiply and identity") {
  const Mat3 id = Mat3::identity();
  CHECK(id * id == id);
  const Mat3 m{{1, 2, 3, 0, 1, 4, 0, 0, 1}};
  CHECK(m * id == m);
  CHECK(id * m == m);
}

TEST_CASE("mat3 inverse for unimodular matrices") {
  const Mat3 m{{1, 2, 3, 0, 1, 4, 0, 0, 1}};
  CHECK(m.det() == 1);
  CHECK(m.inverse() * m == Mat3::identity());
  CHECK(m * m.inverse() == Mat3::identity());

  const Mat3 neg{{-1, 0, 0, 0, 1, 0, 0, 0, 1}};  // det -1
  CHECK(neg.det() == -1);
  CHECK(neg.inverse() * neg == Mat3::identity());

  const Mat3 bad{{1, 0, 0, 0, 2, 0, 0, 0, 1}};
  CHECK_THROWS_AS(bad.inverse(), std::domain_error);
}

TEST_CASE("mat3 pow") {
  const Mat3 m{{1, 1, 0, 0, 1, 0, 0, 1, 1}};
  CHECK(m.pow(0) == Mat3::identity());
  CHECK(m.pow(3) == m * m * m);
  CHECK(m.pow(-2) * m.pow(2) == Mat3::identity());
}

TEST_CASE("mat2 basics") {
  const Mat2 sa{{1, 1, 0, 1}};
  const Mat2 sb{{1, 0, -1, 1}};
  CHECK((sa * sb).det() == 1);
  CHECK(sa.inverse() * sa == Mat2::identity());
  CHECK_THROWS_AS(Mat2{{2, 0, 0, 1}}.inverse(), std::domain_error);
}

TEST_CASE("mod reduction") {
  const Mat3 m{{1, 2, 0, 0, 1, 0, 0, 2, 1}};
  CHECK(m.mod(2) == ResidueMat3::identity(2));
  const Mat3 n{{-1, 5, 0, 0, -7, 0, 3, 2, 1}};
  const ResidueMat3 r = n.mod(3);
  CHECK(r.at(0, 0) == 2);  // -1 mod 3
  CHECK(r.at(1, 1) == 2);  // -7 mod 3
  CHECK(r.at(0, 1) == 2);
  CHECK_THROWS_AS(m.mod(1), std::invalid_argument);
}

TEST_CASE("residue product checks moduli") {
  const ResidueMat3 a = ResidueMat3::identity(3);
  const ResidueMat3 b = ResidueMat3::identity(5);
  CHECK_THROWS_AS(a * b, std::invalid_argument);
  CHECK(a * a == a);
}

TEST_CASE("residue keys are collision-free over a small group") {
  const long long k = 7;
  ResidueMat3 m = ResidueMat3::identity(k);
  m.at(0, 1) = 3;
  ResidueMat3 n = ResidueMat3::identity(k);
  n.at(1, 0) = 3;
  CHECK(m.pack_key() != n.pack_key());
  CHECK(m.pack_key() == m.pack_key());
}

TEST_CASE("matrix text format") {
  const Mat3 m{{1, -2, 3, 0, 1, 4, -5, 0, 1}};
  CHECK(Mat3::from_text(m.to_text()) == m);
  CHECK(Mat3::from_text("1, -2, 3, 0, 1, 4, -5, 0, 1") == m);
  CHECK(Mat3::from_text("1 -2 3\n0 1 4\n-5 0 1\n") == m);
  CHECK_THROWS_AS(Mat3::from_text("1 2 3"), std::invalid_argument);
  CHECK_THROWS_AS(Mat3::from_text("1 2 3 4 5 6 7 8 x"), std::invalid_argument);
  CHECK_THROWS_AS(Mat3::from_text("1 2 3 4 5 6 7 8 9 10"), std::invalid_argument);
}

TEST_CASE("extended gcd") {
  const ExtGcd eg = ext_gcd(240, 46);
  CHECK(eg.g == 2);
  CHECK(240 * eg.x + 46 * eg.y == 2);
  CHECK(int_gcd(-6, 4) == 2);
  CHECK(int_gcd(0, 0) == 0);
  CHECK(int_abs(Int(-5)) == 5);
}
