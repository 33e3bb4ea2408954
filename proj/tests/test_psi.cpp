#include <catch2/catch_amalgamated.hpp>

#include <random>

#include <lmod/psi.hpp>
#include <lmod/suites.hpp>

using namespace lmod;

TEST_CASE("generator images") {
  CHECK(eval_psi(word_parse("a")) == Mat3{{1, 1, 0, 0, 1, 0, 0, 0, 1}});
  CHECK(eval_psi(word_parse("b")) == Mat3{{1, 0, 0, -1, 1, 0, 0, 0, 1}});
  CHECK(eval_psi(word_parse("c")) == Mat3{{1, 1, 0, 0, 1, 0, 0, 1, 1}});
  CHECK(eval_psi(word_parse("i")) == -Mat3::identity());
  CHECK(eval_psi(word_parse("i^2")) == Mat3::identity());
}

TEST_CASE("products match frozen fixtures") {
  // Psi(c) * Psi(b), i.e. the m=1, n=0 member of the c^m b c^n family
  CHECK(eval_psi(word_parse("c b")) == Mat3{{0, 1, 0, -1, 1, 0, -1, 1, 1}});
  CHECK(eval_psi(word_parse("(b c)^6")) == Mat3::identity());
  CHECK(eval_psi(word_parse("(a b)^6")) == Mat3::identity());
}

TEST_CASE("composition convention is pinned by the c^m b c^n family") {
  for (long long m = -5; m <= 5; ++m)
    for (long long n = -5; n <= 5; ++n) {
      TwistWord w;
      w.push(Letter::C, m);
      w.push(Letter::B, 1);
      w.push(Letter::C, n);
      const Int mm = m, nn = n;
      const Mat3 want{{-mm + 1, mm - mm * nn + nn, 0, -1, -nn + 1, 0, -mm,
                       mm - mm * nn + nn, 1}};
      REQUIRE(eval_psi(w) == want);
    }
}

TEST_CASE("homomorphism property") {
  std::mt19937_64 rng(101);
  for (int t = 0; t < 200; ++t) {
    const TwistWord u = random_word(rng, 8);
    const TwistWord v = random_word(rng, 8);
    CHECK(eval_psi(u * v) == eval_psi(u) * eval_psi(v));
    CHECK(eval_psi(u.inverse()) == eval_psi(u).inverse());
  }
}

TEST_CASE("image shape is closed under evaluation") {
  std::mt19937_64 rng(202);
  for (int t = 0; t < 1000; ++t) {
    const Mat3 m = eval_psi(random_word(rng, 10));
    CHECK(in_image_mod(m));
    CHECK(m.inverse() * m == Mat3::identity());
  }
}

TEST_CASE("braid relation images") {
  CHECK(eval_psi(word_parse("a b a")) == eval_psi(word_parse("b a b")));
  CHECK(eval_psi(word_parse("b c b")) == eval_psi(word_parse("c b c")));
  CHECK(eval_psi(word_parse("a c")) == eval_psi(word_parse("c a")));
}

TEST_CASE("eval_psi_mod") {
  CHECK(eval_psi_mod(word_parse("b^2"), 2) == ResidueMat3::identity(2));
  CHECK(eval_psi_mod(word_parse("a^3"), 3) == ResidueMat3::identity(3));
  const ResidueMat3 c3 = eval_psi_mod(word_parse("c"), 3);
  CHECK(c3 == Mat3{{1, 1, 0, 0, 1, 0, 0, 1, 1}}.mod(3));

  std::mt19937_64 rng(303);
  for (int t = 0; t < 200; ++t) {
    const TwistWord w = random_word(rng, 10);
    const long long k = 2 + static_cast<long long>(t % 11);
    CHECK(eval_psi_mod(w, k) == mat3_mod(eval_psi(w), k));
  }
}

TEST_CASE("block form") {
  const BlockForm bc = block_form(eval_psi(word_parse("c")));
  CHECK(bc.a == Mat2{{1, 1, 0, 1}});
  CHECK(bc.v == std::pair<Int, Int>{0, 1});
  CHECK(bc.eps == 1);
  CHECK(bc.reassemble() == eval_psi(word_parse("c")));

  const BlockForm bi = block_form(eval_psi(word_parse("i")));
  CHECK(bi.a == Mat2{{-1, 0, 0, -1}});
  CHECK(bi.v == std::pair<Int, Int>{0, 0});
  CHECK(bi.eps == -1);

  try {
    block_form(Mat3{{1, 0, 0, 0, 2, 0, 0, 0, 1}});
    FAIL("expected ShapeError");
  } catch (const ShapeError& e) {
    CHECK(e.kind == ShapeFailure::BlockNotSl2);
  }
  try {
    block_form(Mat3{{1, 0, 1, 0, 1, 0, 0, 0, 1}});
    FAIL("expected ShapeError");
  } catch (const ShapeError& e) {
    CHECK(e.kind == ShapeFailure::ThirdColumn);
  }
  try {
    block_form(Mat3{{1, 0, 0, 0, 1, 0, 0, 0, 2}});
    FAIL("expected ShapeError");
  } catch (const ShapeError& e) {
    CHECK(e.kind == ShapeFailure::CornerNotUnit);
  }
}

TEST_CASE("liftability") {
  CHECK_FALSE(in_image_lmod(eval_psi(word_parse("c")), Cover(2)));
  CHECK(in_image_lmod(eval_psi(word_parse("c^2")), Cover(2)));
  CHECK_FALSE(lift_test(word_parse("c"), Cover(3)));
  CHECK(lift_test(word_parse("a b a^-1 b^-1"), Cover(5)));
  CHECK(lift_test(word_parse("i"), Cover(7)));
  CHECK(lift_test(word_parse("i"), Cover(2)));

  // conjugates c^j b^K c^-j lift at K, with the displayed image
  for (long long K = 2; K <= 6; ++K)
    for (long long j = 0; j < K; ++j) {
      TwistWord w;
      w.push(Letter::C, j);
      w.push(Letter::B, K);
      w.push(Letter::C, -j);
      REQUIRE(lift_test(w, Cover(K)));
      const Int kk = K, jj = j;
      REQUIRE(eval_psi(w) == Mat3{{1 - kk * jj, kk * jj * jj, 0, -kk, 1 + kk * jj, 0,
                                   -kk * jj, kk * jj * jj, 1}});
    }

  CHECK_THROWS_AS(Cover(1), std::invalid_argument);
}

TEST_CASE("entry growth stays exact") {
  // Psi((a b^-1)^50) has SL2 block [[1,1],[1,0]]^100: Fibonacci entries far
  // beyond any machine word. Oracle: plain bigint addition.
  Int f0 = 0, f1 = 1;  // F(0), F(1)
  std::vector<Int> fib{f0, f1};
  for (int t = 2; t <= 101; ++t) fib.push_back(fib.back() + fib[fib.size() - 2]);

  const Mat3 m = eval_psi(word_parse("(a b^-1)^50"));
  const BlockForm bf = block_form(m);
  CHECK(bf.a == Mat2{{fib[101], fib[100], fib[100], fib[99]}});
  CHECK(bf.v == std::pair<Int, Int>{0, 0});
  CHECK(fib[101] > (Int(1) << 64));
}
