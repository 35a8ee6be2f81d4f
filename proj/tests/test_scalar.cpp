#include <doctest.h>

#include "involute/error.hpp"
#include "involute/rng.hpp"
#include "involute/scalar.hpp"
#include "involute/semiring.hpp"

using namespace involute;

namespace {

Scalar gauss_of(long long re_n, long long re_d, long long im_n,
                long long im_d) {
  return Scalar(GaussianRational{Rational(BigInt(re_n), BigInt(re_d)),
                                 Rational(BigInt(im_n), BigInt(im_d))});
}

// Independent oracle for gf9 products: plain integer arithmetic mod 3 on
// (re, im) pairs with i^2 = -1.
Gf9 gf9_mul_oracle(Gf9 a, Gf9 b) {
  int re = ((a.re * b.re - a.im * b.im) % 3 + 3) % 3;
  int im = (a.re * b.im + a.im * b.re) % 3;
  return {static_cast<std::uint8_t>(re), static_cast<std::uint8_t>(im)};
}

}  // namespace

TEST_CASE("rational arithmetic is exact and canonical") {
  Scalar half(Rational(BigInt(1), BigInt(2)));
  Scalar third(Rational(BigInt(1), BigInt(3)));
  CHECK(add(half, third) == Scalar(Rational(BigInt(5), BigInt(6))));
  CHECK(to_string(add(half, third)) == "5/6");

  // canonicalization at construction
  CHECK(Rational(BigInt(4), BigInt(6)) == Rational(BigInt(2), BigInt(3)));
  CHECK(Rational(BigInt(3), BigInt(-6)) == Rational(BigInt(-1), BigInt(2)));
  CHECK(Rational(BigInt(-1), BigInt(2)).denominator() == 2);
}

TEST_CASE("rational parse accepts exactly the canonical encoding") {
  CHECK(Rational::parse("5/6") == Rational(BigInt(5), BigInt(6)));
  CHECK(Rational::parse("-7") == Rational(-7));
  CHECK(Rational::parse("0") == Rational(0));
  CHECK_THROWS_AS(Rational::parse("4/6"), input_error);
  CHECK_THROWS_AS(Rational::parse("5/1"), input_error);
  CHECK_THROWS_AS(Rational::parse("1/0"), input_error);
  CHECK_THROWS_AS(Rational::parse("03"), input_error);
  CHECK_THROWS_AS(Rational::parse("-0"), input_error);
  CHECK_THROWS_AS(Rational::parse("0/5"), input_error);
  CHECK_THROWS_AS(Rational::parse(""), input_error);
  CHECK_THROWS_AS(Rational::parse("a"), input_error);
  CHECK_THROWS_AS(Rational::parse("1/-2"), input_error);
}

TEST_CASE("rational parse/print round trip on samples") {
  Rng rng(42);
  for (int i = 0; i < 500; ++i) {
    Scalar s = Semiring::rational().sample(rng);
    CHECK(Rational::parse(to_string(s)) == s.as_rational());
  }
}

TEST_CASE("gaussian rational conjugation and products") {
  // 3+4i -> 3-4i
  Scalar s = gauss_of(3, 1, 4, 1);
  CHECK(conj(s) == gauss_of(3, 1, -4, 1));
  CHECK(conj(conj(s)) == s);

  // (1+i)(1-i) = 2
  Scalar onei = gauss_of(1, 1, 1, 1);
  CHECK(mul(onei, conj(onei)) == gauss_of(2, 1, 0, 1));

  Rng rng(7);
  for (int i = 0; i < 200; ++i) {
    Scalar a = Semiring::gauss().sample(rng);
    CHECK(conj(conj(a)) == a);
  }
}

TEST_CASE("boolean semiring") {
  Scalar t(true), f(false);
  CHECK(add(t, t) == t);  // OR is idempotent
  CHECK(add(f, t) == t);
  CHECK(mul(t, f) == f);
  CHECK(conj(t) == t);
}

TEST_CASE("gf9 arithmetic against the mod-3 oracle") {
  // conj(1+i) = 1+2i, i.e. 1-i mod 3
  CHECK(gf9_conj(Gf9{1, 1}) == Gf9{1, 2});
  // (1+i)^2 = 2i
  CHECK(gf9_mul(Gf9{1, 1}, Gf9{1, 1}) == Gf9{0, 2});

  for (int i = 0; i < 9; ++i)
    for (int j = 0; j < 9; ++j) {
      Gf9 a = gf9_of_index(i), b = gf9_of_index(j);
      CHECK(gf9_mul(a, b) == gf9_mul_oracle(a, b));
    }
}

TEST_CASE("gf9 enumeration and conjugation fixed points") {
  const Semiring& s = Semiring::gf9();
  REQUIRE(s.enumerable());
  CHECK(s.elements().size() == 9);

  int fixed = 0;
  bool identity = true;
  for (const Scalar& e : s.elements()) {
    if (conj(e) == e)
      ++fixed;
    else
      identity = false;
    CHECK(conj(conj(e)) == e);
  }
  CHECK(fixed == 3);      // exactly 0, 1, 2
  CHECK_FALSE(identity);  // order-2 automorphism, not the identity
}

TEST_CASE("mixed scalar kinds are rejected") {
  CHECK_THROWS_AS(add(Scalar(true), Scalar(Rational(1))), input_error);
  CHECK_THROWS_AS(mul(Scalar(Gf9{1, 0}), Scalar(Rational(1))), input_error);
}
