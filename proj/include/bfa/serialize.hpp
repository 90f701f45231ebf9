#pragma once

#include <string>

#include <json.hpp>

#include "bfa/vbf.hpp"

namespace bfa {

// Stable key order: n, B, N, sum_linear, t, spectrum, uniformity,
// per_component; t is null outside the quadratic-APN law.
nlohmann::ordered_json census_to_json(const CensusReport& r);

// One row per component: lambda,dimV,class,maxAbsW (with a header line).
std::string census_to_csv(const CensusReport& r);

}  // namespace bfa
