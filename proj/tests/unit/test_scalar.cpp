#include <doctest.h>

#include "hkr/errors.hpp"
#include "hkr/scalar.hpp"
#include "oracles.hpp"

using namespace hkr;

TEST_SUITE("scalar") {
  TEST_CASE("products of square roots reduce by integer factorization") {
    // 2 * 3 = 6 and 2 * 6 = 2^2 * 3.
    CHECK(Scalar::sqrt(2) * Scalar::sqrt(3) == Scalar::sqrt(6));
    CHECK(Scalar::sqrt(2) * Scalar::sqrt(6) == Scalar(2) * Scalar::sqrt(3));
    CHECK(Scalar::sqrt(12) == Scalar(2) * Scalar::sqrt(3));
    CHECK(Scalar::sqrt(frac(1, 2)) == Scalar(frac(1, 2)) * Scalar::sqrt(2));
    CHECK(Scalar::sqrt(-4) == Scalar(0, 2));
    CHECK((Scalar::sqrt(5) * Scalar::sqrt(5)).is_rational());
  }

  TEST_CASE("inverse rationalizes conjugates") {
    Scalar x = Scalar(1) + Scalar::sqrt(2);
    CHECK(x.inverse() == Scalar::sqrt(2) - Scalar(1));
    Scalar y = Scalar(1) + Scalar::sqrt(2) + Scalar::sqrt(3);
    CHECK((y * y.inverse()).is_one());
    Scalar z(1, 1);
    CHECK(z.inverse() == Scalar(frac(1, 2), frac(-1, 2)));
    CHECK_THROWS_AS(Scalar().inverse(), ZeroDivision);
  }

  TEST_CASE("predicates and conjugation") {
    Scalar s = Scalar(3) + Scalar(0, 2) * Scalar::sqrt(2);
    CHECK_FALSE(s.is_real());
    CHECK(s.conj() == Scalar(3) - Scalar(0, 2) * Scalar::sqrt(2));
    CHECK((s * s.conj()).is_rational());
    CHECK((s * s.conj()).to_rational() == 17);
    CHECK(Scalar::sqrt(2).is_real());
    CHECK_FALSE(Scalar::sqrt(2).is_rational());
  }

  TEST_CASE("text round trip") {
    for (const char* text : {"0", "1", "-3/4", "i", "-i", "1/4*sqrt(2)", "-1/4*i*sqrt(2)",
                             "1 + sqrt(2)", "2/3 - 5*i*sqrt(6)"}) {
      Scalar s = Scalar::parse(text);
      CHECK(Scalar::parse(s.str()) == s);
    }
    CHECK(Scalar::parse("1/4*sqrt(2)") == Scalar(frac(1, 4)) * Scalar::sqrt(2));
    CHECK(Scalar::parse("sqrt(8)") == Scalar(2) * Scalar::sqrt(2));
    CHECK_THROWS_AS(Scalar::parse("1/0"), Error);
    CHECK_THROWS_AS(Scalar::parse("sqrt("), ParseError);
    CHECK_THROWS_AS(Scalar::parse("abc"), ParseError);
  }

  TEST_CASE("squarefree split") {
    Integer root, free;
    squarefree_split(Integer(72), root, free);
    CHECK(root == 6);
    CHECK(free == 2);
    squarefree_split(Integer(1), root, free);
    CHECK(root == 1);
    CHECK(free == 1);
  }

  TEST_CASE("field axioms on random elements") {
    std::mt19937_64 rng(7);
    for (int k = 0; k < 300; ++k) {
      Scalar a = oracle::small_scalar(rng), b = oracle::small_scalar(rng),
             c = oracle::small_scalar(rng);
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a - a == Scalar());
      CHECK((a * b).conj() == a.conj() * b.conj());
      Scalar n = oracle::nonzero_scalar(rng);
      CHECK((n * n.inverse()).is_one());
      CHECK((a / n) * n == a);
    }
  }
}
