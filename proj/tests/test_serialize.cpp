#include <doctest.h>

#include "bfa/constructions.hpp"
#include "bfa/serialize.hpp"

using namespace bfa;

TEST_CASE("census JSON carries the stable key order") {
    const CensusReport r = census(gold(4, 1, FieldSpec::conway(4)));
    const nlohmann::ordered_json j = census_to_json(r);

    std::vector<std::string> keys;
    for (const auto& [key, value] : j.items()) keys.push_back(key);
    CHECK(keys == std::vector<std::string>({"n", "B", "N", "sum_linear", "t", "spectrum",
                                            "uniformity", "per_component"}));

    CHECK(j["n"] == 4);
    CHECK(j["B"] == 10);
    CHECK(j["N"] == 5);
    CHECK(j["sum_linear"] == 15);
    CHECK(j["t"] == 0);
    CHECK(j["uniformity"] == 2);
    CHECK(j["per_component"].size() == 15);
    const auto& first = j["per_component"][0];
    CHECK(first.contains("lambda"));
    CHECK(first.contains("dimV"));
    CHECK(first.contains("class"));
    CHECK(first.contains("maxAbsW"));

    // t is null outside the quadratic-APN law
    std::vector<uint32_t> id(16);
    for (uint32_t x = 0; x < 16; ++x) id[x] = x;
    const nlohmann::ordered_json j_id =
        census_to_json(census(VectorialFunc{4, std::move(id)}));
    CHECK(j_id["t"].is_null());
}

TEST_CASE("census CSV has one row per component") {
    const CensusReport r = census(gold(4, 1, FieldSpec::conway(4)));
    const std::string csv = census_to_csv(r);
    size_t rows = 0;
    for (char c : csv)
        if (c == '\n') ++rows;
    CHECK(rows == 16);  // header + 15 components
    CHECK(csv.substr(0, 28) == "lambda,dimV,class,maxAbsW\n1,");
}
