#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "bfa/boolfunc.hpp"
#include "bfa/constructions.hpp"
#include "bfa/vbf.hpp"

namespace bfa::verify {

// Seeded generators used by the verification suites (and reusable in tests).
BoolFunc random_function(int n, std::mt19937_64& rng);
BoolFunc random_quadratic(int n, std::mt19937_64& rng);  // degree <= 2
VectorialFunc random_vectorial(int n, std::mt19937_64& rng);
Affinity random_affinity(int n, std::mt19937_64& rng);   // invertible
BoolFunc random_bent(int n, std::mt19937_64& rng);       // bent_mm under a random affinity

struct CheckResult {
    std::string name;
    uint64_t pass = 0;
    uint64_t fail = 0;
};

struct SuiteResult {
    std::string suite;
    uint64_t seed = 0;
    std::vector<CheckResult> checks;

    bool ok() const;
};

// Deterministic given the seed. The suites re-derive the library's claimed
// identities from scratch on random and catalog inputs; they do not use the
// test-only brute-force oracles.
SuiteResult run_core(uint64_t seed);
SuiteResult run_constructions(uint64_t seed);
SuiteResult run_apn(uint64_t seed);
SuiteResult run_power(uint64_t seed, int n_max = 8);
std::vector<SuiteResult> run_all(uint64_t seed);

}  // namespace bfa::verify
