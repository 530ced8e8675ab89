#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "orbitlab/analysis/constants.hpp"
#include "orbitlab/analysis/orbit.hpp"

namespace orbitlab::cli {

using Json = nlohmann::ordered_json;

/// 12 significant digits, "%.12g".
std::string fmt12(double x);
/// x rounded to 12 significant digits, as stored in reports.
double round12(double x);

Json logsum_json(const arith::LogSum& ls);
arith::LogSum logsum_from_json(const Json& j);

Json record_json(const analysis::OrbitRecord& r);
analysis::OrbitRecord record_from_json(const Json& j);

std::string orbit_csv(const std::vector<analysis::OrbitRecord>& records);

Json rational_json(const arith::Rational& r);

}  // namespace orbitlab::cli
