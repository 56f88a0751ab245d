#include <doctest.h>

#include <set>

#include "hkr/catalog.hpp"
#include "oracles.hpp"

using namespace hkr;

namespace {

std::set<std::vector<Rational>> coord_set(const RestrictedRootData& d) {
  std::set<std::vector<Rational>> out;
  for (const auto& r : d.roots) out.insert(r.coords);
  return out;
}

std::multiset<int> multiplicities(const RestrictedRootData& d) {
  std::multiset<int> out;
  for (const auto& r : d.roots) out.insert(r.multiplicity);
  return out;
}

}  // namespace

TEST_SUITE("rootsys") {
  TEST_CASE("sp(4,R) restricted roots") {
    // With a = diag(a1, a2, -a1, -a2): +-2e_i and +-e_1 +- e_2, all multiplicity one.
    auto d = restricted_roots(build(FormId::sp_r(2)));
    std::set<std::vector<Rational>> expect;
    for (int s : {1, -1}) {
      expect.insert(std::vector<Rational>{Rational(2 * s), Rational(0)});
      expect.insert(std::vector<Rational>{Rational(0), Rational(2 * s)});
      expect.insert(std::vector<Rational>{Rational(s), Rational(s)});
      expect.insert(std::vector<Rational>{Rational(s), Rational(-s)});
    }
    CHECK(coord_set(d) == expect);
    for (const auto& r : d.roots) CHECK(r.multiplicity == 1);
    CHECK(d.type.label() == "C_2");
    CHECK(d.weyl_order == 8);
    CHECK(d.simple.size() == 2);
    CHECK(d.zero_space.size() == 2);
  }

  TEST_CASE("su(1,2) is non-reduced") {
    auto d = restricted_roots(build(FormId::su(1, 2)));
    CHECK(d.roots.size() == 4);
    CHECK(multiplicities(d) == std::multiset<int>{1, 1, 2, 2});
    CHECK(d.type.label() == "BC_1");
    CHECK(d.reduced_type.label() == "A_1");
    CHECK(d.reduced.size() == 2);
    // dim g = dim c_g(a) + sum of multiplicities.
    std::size_t total = d.zero_space.size();
    for (const auto& r : d.roots) total += r.multiplicity;
    CHECK(total == 8);
  }

  TEST_CASE("root space dimensions add up") {
    for (const auto& id : {FormId::so_star(5), FormId::su_star(3), FormId::sp(1, 2), FormId::sl_c(3)}) {
      CAPTURE(id.label());
      RealForm s = build(id);
      auto d = restricted_roots(s);
      std::size_t total = d.zero_space.size();
      for (const auto& r : d.roots) {
        total += r.multiplicity;
        CHECK(r.space.size() == static_cast<std::size_t>(r.multiplicity));
      }
      CHECK(total == s.dim());
      CHECK(d.type.canonical() == canonical_type_label(lookup_table1(id).restricted_type));
    }
  }

  TEST_CASE("standard Cartan matrices classify to themselves") {
    const std::pair<const char*, int> types[] = {{"A", 1}, {"A", 4}, {"B", 3}, {"C", 3},
                                                 {"D", 4}, {"D", 5}, {"E", 6}, {"F", 4},
                                                 {"G", 2}};
    for (const auto& [fam, n] : types) {
      CAPTURE(fam);
      CAPTURE(n);
      auto t = classify_cartan(standard_cartan(fam, n));
      REQUIRE(t.components.size() == 1);
      CHECK(t.components[0].family == fam);
      CHECK(t.components[0].rank == n);
    }
    // Reducible: A_1 x A_1.
    Matrix<Rational> a(2, 2);
    a(0, 0) = a(1, 1) = 2;
    CHECK(classify_cartan(a).canonical() == "A_1xA_1");
    CHECK(canonical_type_label("D_3") == canonical_type_label("A_3"));
    CHECK(canonical_type_label("B_2") == canonical_type_label("C_2"));
    CHECK(canonical_type_label("D_2") == canonical_type_label("A_1xA_1"));
  }

  TEST_CASE("Weyl group orders") {
    const std::tuple<const char*, int, std::size_t> orders[] = {
        {"A", 1, 2},  {"A", 2, 6},   {"A", 3, 24},  {"A", 4, 120}, {"B", 2, 8},    {"B", 3, 48},
        {"C", 3, 48}, {"B", 4, 384}, {"D", 4, 192}, {"G", 2, 12},  {"F", 4, 1152}};
    for (const auto& [fam, n, order] : orders) {
      CAPTURE(fam);
      CAPTURE(n);
      auto [simple, gram] = oracle::symmetrized(standard_cartan(fam, n));
      CHECK(weyl_group(simple, gram).order() == order);
    }
  }

  TEST_CASE("exponents agree with the Molien series on small groups") {
    for (const auto& [fam, n] : std::vector<std::pair<std::string, int>>{
             {"A", 1}, {"A", 2}, {"B", 2}, {"G", 2}, {"A", 3}, {"C", 3}}) {
      CAPTURE(fam);
      CAPTURE(n);
      auto [simple, gram] = oracle::symmetrized(standard_cartan(fam, n));
      CartanType t{{CartanComponent{fam, n, {}}}};
      CHECK(oracle::molien_degrees(weyl_group(simple, gram), 8) == exponents(t));
    }
  }

  TEST_CASE("exponent tables") {
    CHECK(exponents(CartanType{{CartanComponent{"BC", 2, {}}}}) == std::vector<int>{2, 4});
    CHECK(exponents(CartanType{{CartanComponent{"D", 4, {}}}}) == std::vector<int>{2, 4, 4, 6});
    CHECK(exponents(CartanType{}).empty());
    CHECK_THROWS_AS(exponents(CartanType{{CartanComponent{"X", 1, {}}}}), UnrecognizedDiagram);
  }

  TEST_CASE("full root data of sl(2,C) and su(1,2)") {
    {
      RealForm s = build(FormId::sl_c(2));
      auto d = restricted_roots(s);
      auto c = full_root_classification(s, d);
      CHECK(c.num_roots == 4);
      CHECK(c.num_complex == 4);
    }
    {
      RealForm s = build(FormId::su(1, 2));
      auto d = restricted_roots(s);
      auto c = full_root_classification(s, d);
      CHECK(c.num_roots == 6);
      // alpha_1 + alpha_2 is real; theta swaps alpha_1 and -alpha_2.
      CHECK(c.num_imaginary == 0);
      CHECK(c.num_real == 2);
      CHECK(c.num_complex == 4);
    }
    {
      // sp(1,2): c_h(a) contains sp(1) + sp(1), giving four imaginary roots.
      RealForm s = build(FormId::sp(1, 2));
      auto d = restricted_roots(s);
      auto c = full_root_classification(s, d);
      CHECK(c.num_roots == 18);
      CHECK(c.num_imaginary == 4);
      CHECK(c.num_real == 2);
    }
  }
}
