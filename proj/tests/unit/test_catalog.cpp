#include <doctest.h>

#include <cstdlib>

#include "hkr/catalog.hpp"

using namespace hkr;

TEST_SUITE("catalog") {
  TEST_CASE("form syntax round trips") {
    for (const auto& id : default_forms()) {
      CAPTURE(id.str());
      CHECK(FormId::parse(id.str()) == id);
      CHECK(FormId::parse(id.label()) == id);
    }
    CHECK(FormId::parse("su(1,2)") == FormId::su(1, 2));
    CHECK(FormId::parse("sl(3,R)") == FormId::sl_r(3));
    CHECK(FormId::parse("sl(2,C)") == FormId::sl_c(2));
    CHECK(FormId::parse("so*(6)") == FormId::so_star(3));
    CHECK(FormId::parse("su_star:n=2").label() == "su*(4)");
  }

  TEST_CASE("malformed and out-of-range forms") {
    CHECK_THROWS_AS(FormId::parse("foo:n=2"), ParseError);
    CHECK_THROWS_AS(FormId::parse("su:p=1"), ParseError);
    CHECK_THROWS_AS(FormId::parse("sl_r:n=x"), ParseError);
    CHECK_THROWS_AS(FormId::parse("sl_r:n=1"), InvalidParams);
    CHECK_THROWS_AS(FormId::parse("su:p=0,q=2"), InvalidParams);
    CHECK_THROWS_AS(build(FormId::sl_r(13)), SizeBound);
  }

  TEST_CASE("size bound follows the environment") {
    REQUIRE(max_matrix_size() == 12);
    setenv("HKR_MAX_DIM", "3", 1);
    CHECK_THROWS_AS(build(FormId::sl_r(4)), SizeBound);
    CHECK_NOTHROW(build(FormId::sl_r(3)));
    unsetenv("HKR_MAX_DIM");
    CHECK(max_matrix_size() == 12);
  }

  TEST_CASE("reference rows") {
    auto e = lookup_table1(FormId::su(1, 2));
    CHECK(e.split_sub == "so(1,2)");
    CHECK(e.restricted_type == "BC_1");
    CHECK(e.split_dim == 3);
    CHECK(e.quasi_split);
    auto f = lookup_table1(FormId::sp(1, 2));
    CHECK(f.split_sub == "so(1,2)");
    CHECK_FALSE(f.quasi_split);
    CHECK(lookup_table1(FormId::su(2, 2)).split_sub == "sp(4,R)");
    CHECK(lookup_table1(FormId::so_star(4)).split_sub == "sp(4,R)");
    CHECK(lookup_table1(FormId::so_star(5)).split_sub == "so(2,3)");
    CHECK(lookup_table1(FormId::so(2, 4)).split_sub == "so(2,3)");
    CHECK(lookup_table1("e6(-26)").split_sub == "sl(3,R)");
    CHECK(lookup_table1("f4(-20)").restricted_type == "BC_1");
    CHECK_THROWS_AS(lookup_table1("g2(7)"), NotInTable);
    CHECK(table1_rows().size() >= 12);
  }

  TEST_CASE("real ranks") {
    CHECK(expected_real_rank(FormId::so_star(5)) == 2);
    CHECK(expected_real_rank(FormId::su(2, 3)) == 2);
    CHECK(expected_real_rank(FormId::su_star(3)) == 2);
    CHECK(expected_real_rank(FormId::sl_c(3)) == 2);
  }
}
