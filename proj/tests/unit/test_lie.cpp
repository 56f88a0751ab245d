#include <doctest.h>

#include "hkr/catalog.hpp"
#include "oracles.hpp"

using namespace hkr;

namespace {

struct Expect {
  FormId id;
  std::size_t dim, dim_h, rank;
};

QVec random_element(std::mt19937_64& rng, std::size_t d) {
  QVec v(d);
  for (auto& x : v) x = oracle::small_rational(rng);
  return v;
}

}  // namespace

TEST_SUITE("lie") {
  TEST_CASE("dimensions of the classical families") {
    const Expect table[] = {
        {FormId::sl_r(3), 8, 3, 2},      {FormId::su(1, 2), 8, 4, 1},
        {FormId::su(2, 2), 15, 7, 2},    {FormId::sp_r(2), 10, 4, 2},
        {FormId::so(1, 3), 6, 3, 1},     {FormId::so(2, 3), 10, 4, 2},
        {FormId::su_star(2), 15, 10, 1}, {FormId::sp(1, 2), 21, 13, 1},
        {FormId::so_star(4), 28, 16, 2}, {FormId::sl_c(2), 6, 3, 1},
    };
    for (const auto& e : table) {
      CAPTURE(e.id.label());
      RealForm s = build(e.id);
      CHECK(s.dim() == e.dim);
      CHECK(s.dim_h() == e.dim_h);
      CHECK(s.real_rank() == e.rank);
      CHECK(static_cast<int>(e.rank) == expected_real_rank(e.id));
    }
  }

  TEST_CASE("structure checks pass on small forms") {
    for (auto id : {FormId::sl_r(2), FormId::su(1, 2), FormId::so_star(3), FormId::sl_c(2)}) {
      CAPTURE(id.label());
      RealForm s = build(id);
      CHECK_NOTHROW(check_structure(s));
      auto signs = ldl_signs(s.gram());
      // B is negative definite on h and positive definite on m.
      CHECK(std::count(signs.begin(), signs.end(), 1) == static_cast<long>(s.dim_m()));
    }
  }

  TEST_CASE("structure constants match matrix commutators") {
    std::mt19937_64 rng(21);
    for (auto id : {FormId::su(1, 2), FormId::sp_r(2), FormId::so_star(3)}) {
      CAPTURE(id.label());
      RealForm s = build(id);
      for (int k = 0; k < 10; ++k) {
        QVec x = random_element(rng, s.dim()), y = random_element(rng, s.dim()),
             z = random_element(rng, s.dim());
        QVec xy = s.bracket(x, y);
        CHECK(s.to_matrix(xy) == bracket(s.to_matrix(x), s.to_matrix(y)));
        // Jacobi identity.
        QVec j = add(add(s.bracket(x, s.bracket(y, z)), s.bracket(y, s.bracket(z, x))),
                     s.bracket(z, xy));
        CHECK(is_zero_vec(j));
        // theta is an automorphism and B is ad-invariant.
        CHECK(s.theta(xy) == s.bracket(s.theta(x), s.theta(y)));
        CHECK(s.form(xy, z) == s.form(x, s.bracket(y, z)));
      }
    }
  }

  TEST_CASE("coordinates and membership") {
    RealForm s = build(FormId::sl_r(2));
    Mat id = Mat::identity(2);
    CHECK_FALSE(s.try_coords(id));
    CHECK_THROWS_AS(s.coords(id), Error);
    for (std::size_t k = 0; k < s.dim(); ++k) {
      CVec e(s.dim());
      e[k] = 1;
      CHECK(s.coords(s.to_matrix(e)) == e);
      CHECK((k < s.dim_h() ? s.in_h(e) : s.in_m(e)));
    }
  }

  TEST_CASE("ldl signature") {
    Matrix<Rational> g(2, 2);
    g(0, 0) = 1;
    g(1, 1) = -3;
    auto signs = ldl_signs(g);
    CHECK(std::count(signs.begin(), signs.end(), 1) == 1);
    CHECK(std::count(signs.begin(), signs.end(), -1) == 1);
  }

  TEST_CASE("subalgebra generation") {
    // E_12 and E_21 generate sl(2).
    Mat e(2, 2), f(2, 2);
    e(0, 1) = 1;
    f(1, 0) = 1;
    Subspace sl2 = generate_subalgebra({e, f}, 2);
    CHECK(sl2.dim() == 3);
    Mat h = bracket(e, f);
    CHECK(sl2.contains(h));
    CHECK(centralizer(sl2, h).dim() == 1);
  }
}
