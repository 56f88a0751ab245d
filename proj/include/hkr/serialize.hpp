#pragma once

// JSON views of the analysis results. Scalars are written in their text
// grammar and matrices as row-major arrays of such strings.

#include <json.hpp>

#include "hkr/hitchin_dims.hpp"

namespace hkr {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

Json to_json(const Scalar& s);
Json to_json(const Mat& m);
Json to_json(const QVec& v);
Mat matrix_from_json(const Json& j);

Json describe_json(const FormAnalysis& fa);
Json hkr_json(const FormAnalysis& fa);
Json section_json(const FormAnalysis& fa, const std::vector<Scalar>& gamma);
Json dims_json(const DimensionReport& r);
Json table1_json(const TableOneEntry& e);
Json lemma73_json(const SoStarReport& r);

}  // namespace hkr
