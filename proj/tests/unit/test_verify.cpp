#include <doctest.h>

#include "hkr/verify.hpp"

using namespace hkr;

TEST_SUITE("verify") {
  TEST_CASE("random rationals stay in range and are canonical") {
    std::mt19937_64 rng(1);
    for (int k = 0; k < 500; ++k) {
      Rational q = random_rational(rng);
      CHECK(abs(q.get_num()) <= 9);
      CHECK(q.get_den() >= 1);
      CHECK(q.get_den() <= 4);
      Rational c = q;
      c.canonicalize();
      CHECK(c.get_num() == q.get_num());
      CHECK(c.get_den() == q.get_den());
    }
    CHECK(random_gamma(rng, 3).size() == 3);
  }

  TEST_CASE("Cayley transforms of skew matrices are orthogonal") {
    Mat a(3, 3);
    a(0, 1) = frac(1, 2);
    a(1, 0) = frac(-1, 2);
    a(1, 2) = 2;
    a(2, 1) = -2;
    Mat c = cayley(a);
    Mat ct(3, 3);
    for (std::size_t r = 0; r < 3; ++r)
      for (std::size_t k = 0; k < 3; ++k) ct(r, k) = c(k, r);
    CHECK(ct * c == Mat::identity(3));
  }

  TEST_CASE("exponential of a nilpotent matrix") {
    Mat n(3, 3);
    n(0, 1) = 1;
    n(1, 2) = 1;
    Mat e = exp_nilpotent(n);
    CHECK(e(0, 2) == Scalar(frac(1, 2)));
    CHECK(e(0, 0) == Scalar(1));
    Mat m = n;
    for (auto& x : m.data()) x = -x;
    CHECK(e * exp_nilpotent(m) == Mat::identity(3));
  }

  TEST_CASE("suites pass on small forms and are reproducible") {
    VerifyOptions opt;
    opt.regularity_samples = 10;
    opt.invariance_samples = 4;
    opt.fiber_samples = 5;
    opt.injectivity_pairs = 10;
    opt.jacobi_samples = 5;
    for (auto id : {FormId::sl_r(2), FormId::su(1, 2), FormId::so(2, 2)}) {
      CAPTURE(id.label());
      auto first = verify_form(id, opt);
      auto again = verify_form(id, opt);
      REQUIRE(first.size() == again.size());
      for (std::size_t k = 0; k < first.size(); ++k) {
        CAPTURE(first[k].check);
        CAPTURE(first[k].detail);
        CHECK(first[k].ok);
        CHECK(first[k].detail == again[k].detail);
      }
    }
  }

  TEST_CASE("reasons for skipped checks") {
    VerifyOptions opt;
    opt.regularity_samples = 2;
    auto res = verify_form(FormId::so(2, 2), opt);
    bool skipped = false;
    for (const auto& r : res)
      if (r.check == "fiber_match") skipped = !r.applicable;
    CHECK(skipped);
  }

  TEST_CASE("a construction error is a failed check") {
    auto res = verify_form(FormId::sl_r(13), VerifyOptions{});
    REQUIRE(res.size() == 1);
    CHECK(res[0].check == "construction");
    CHECK_FALSE(res[0].ok);
  }
}
