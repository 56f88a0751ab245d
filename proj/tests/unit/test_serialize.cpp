#include <doctest.h>

#include "hkr/serialize.hpp"

using namespace hkr;

TEST_SUITE("serialize") {
  TEST_CASE("matrices round trip through JSON text") {
    Mat m(2, 2);
    m(0, 0) = Scalar(frac(1, 4)) * Scalar::sqrt(2);
    m(0, 1) = Scalar(0, -1);
    m(1, 0) = Scalar(frac(-2, 3));
    Json j = Json::parse(to_json(m).dump());
    CHECK(matrix_from_json(j) == m);
    CHECK(to_json(Scalar(frac(-1, 2))) == "-1/2");
    CHECK_THROWS_AS(matrix_from_json(Json::parse(R"([["1","2"],["3"]])")), Error);
  }

  TEST_CASE("describe and hkr views") {
    FormAnalysis fa(FormId::su(1, 2));
    Json d = describe_json(fa);
    CHECK(d["schema"] == kSchemaVersion);
    CHECK(d["restricted"]["type"] == "BC_1");
    CHECK(d["restricted"]["rank"] == 1);
    CHECK(d["split_sub"] == "so(1,2)");
    CHECK(d["split_dim"] == 3);
    Json h = hkr_json(fa);
    CHECK(h["relations_verified"] == true);
    // The JSON triple is the computed one.
    CHECK(matrix_from_json(h["e"]) == fa.form.to_matrix(fa.triple.e));
  }

  TEST_CASE("dims view") {
    FormAnalysis fa(FormId::sp_r(2));
    Json j = dims_json(dimension_report(fa, CurveContext::K(2)));
    CHECK(j["base_dim"] == 10);
    CHECK(j["expected_moduli_dim"] == 10);
    CHECK(j["hkr_open"] == true);
    CHECK(j["openness"]["reduced"] == 0);
  }

  TEST_CASE("section view") {
    FormAnalysis fa(FormId::sl_r(2));
    Json j = section_json(fa, {Scalar(1)});
    CHECK(j["regular"] == true);
    CHECK(j["centralizer_dim"] == 1);
  }
}
