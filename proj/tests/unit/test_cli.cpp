#include <doctest.h>

#include <sstream>

#include "hkr/cli.hpp"
#include "hkr/serialize.hpp"

using namespace hkr;

namespace {

struct Outcome {
  int rc;
  std::string out, err;
};

Outcome call(std::vector<std::string> args) {
  std::ostringstream out, err;
  int rc = run(args, out, err);
  return {rc, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("exit codes") {
    CHECK(call({"list"}).rc == 0);
    CHECK(call({}).rc == 2);
    CHECK(call({"frobnicate"}).rc == 2);
    CHECK(call({"describe", "bogus:n=2"}).rc == 2);
    CHECK(call({"describe", "sl_r:n=1"}).rc == 2);
    CHECK(call({"dims", "sl_r:n=2", "--L", "Q"}).rc == 2);
    CHECK(call({"lemma73", "--n", "4"}).rc == 2);
    CHECK(call({"table1", "g2(7)"}).rc == 2);
    CHECK(call({"describe", "sl_r:n=13"}).rc == 1);
    CHECK(call({"dims", "sl_r:n=2", "--genus", "1"}).rc == 2);
    CHECK(call({"dims", "su:p=2,q=2", "--L", "deg:1"}).rc == 1);
  }

  TEST_CASE("list names every built-in form") {
    auto o = call({"list"});
    for (const auto& id : default_forms()) CHECK(o.out.find(id.str()) != std::string::npos);
  }

  TEST_CASE("json outputs parse") {
    auto d = call({"describe", "su:p=1,q=2", "--json"});
    REQUIRE(d.rc == 0);
    Json j = Json::parse(d.out);
    CHECK(j["restricted"]["type"] == "BC_1");
    CHECK(j["split_sub"] == "so(1,2)");

    auto s = call({"section", "sl_r:n=2", "--gamma", "1", "--json"});
    REQUIRE(s.rc == 0);
    CHECK(Json::parse(s.out)["regular"] == true);

    auto m = call({"dims", "sl_c:n=2", "--genus", "2", "--L", "K", "--N", "1", "--json"});
    REQUIRE(m.rc == 0);
    Json mj = Json::parse(m.out);
    CHECK(mj["base_dim"] == 3);
    CHECK(mj["expected_moduli_dim"] == 6);

    auto t = call({"table1", "su(2,2)", "--json"});
    REQUIRE(t.rc == 0);
    CHECK(Json::parse(t.out)["split_sub"] == "sp(4,R)");
  }

  TEST_CASE("section gamma parsing") {
    CHECK(call({"section", "sl_r:n=2", "--gamma", "1/2,3"}).rc == 2);
    CHECK(call({"section", "sl_r:n=3", "--gamma", "1/2,sqrt(2)"}).rc == 0);
    CHECK(call({"section", "sl_r:n=3", "--gamma", "1/2,("}).rc == 2);
  }

  TEST_CASE("lemma and verify verbs") {
    auto l = call({"lemma73", "--n", "3", "--json"});
    CHECK(l.rc == 0);
    auto v = call({"verify", "sl_r:n=2", "--seed", "3"});
    CHECK(v.rc == 0);
    CHECK(call({"verify"}).rc == 2);
  }
}
