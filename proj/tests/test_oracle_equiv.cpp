#include <doctest.h>

#include <random>

#include "bfa/constructions.hpp"
#include "bfa/verify.hpp"
#include "oracle.hpp"

using namespace bfa;

namespace {

bool same_linear_space(const LinearSpace& a, const LinearSpace& b) {
    return a.dim == b.dim && a.constants == b.constants;
}

}  // namespace

TEST_CASE("fast paths equal the brute-force oracles on random functions") {
    std::mt19937_64 rng(1);
    for (int n = 3; n <= 10; ++n) {
        const int trials = 1000;
        for (int trial = 0; trial < trials; ++trial) {
            const BoolFunc f = verify::random_function(n, rng);
            CHECK(walsh(f).values == oracle::walsh_naive(f).values);
            CHECK(weight(f) == oracle::weight_by_evaluation(f));
            if (trial % 4 == 0)
                CHECK(same_linear_space(linear_space(f), oracle::linear_space_naive(f)));
            if (n % 2 == 0 && trial % 4 == 0)
                CHECK((classify(f).cls == SpectrumClass::Bent) ==
                      oracle::bent_by_derivatives(f));
        }
    }
}

TEST_CASE("DDT and APN fast paths equal the oracles") {
    std::mt19937_64 rng(2);
    for (int n = 3; n <= 7; ++n) {
        for (int trial = 0; trial < 300; ++trial) {
            const VectorialFunc F = verify::random_vectorial(n, rng);
            const Ddt fast = ddt(F);
            const Ddt naive = oracle::ddt_naive(F);
            CHECK(fast.counts == naive.counts);
            CHECK(fast.uniformity == naive.uniformity);
            CHECK(is_apn(F) == oracle::apn_by_definition(F));
            CHECK(differential_uniformity(F) == naive.uniformity);
        }
    }
}

TEST_CASE("oracles agree on the catalog and the power maps") {
    for (const CatalogEntry& e : catalog_entries()) {
        const VectorialFunc F = catalog(e.name);
        CHECK(is_apn(F) == oracle::apn_by_definition(F));
        CHECK(ddt(F).counts == oracle::ddt_naive(F).counts);
        for (uint32_t lam : {1u, 7u, uint32_t(F.size() - 1)}) {
            const BoolFunc f = component(F, lam);
            CHECK(walsh(f).values == oracle::walsh_naive(f).values);
            CHECK(same_linear_space(linear_space(f), oracle::linear_space_naive(f)));
        }
    }
    for (int n = 2; n <= 8; ++n) {
        const FieldSpec field = FieldSpec::conway(n);
        for (int k = 1; k < n; ++k) {
            const VectorialFunc F = gold(n, k, field);
            CHECK(is_apn(F) == oracle::apn_by_definition(F));
            CHECK(differential_uniformity(F) == oracle::ddt_naive(F).uniformity);
        }
    }
}

TEST_CASE("bent-by-derivatives on the inner-product quadratic") {
    CHECK(oracle::bent_by_derivatives(bent_mm(4)));
    CHECK(oracle::bent_by_derivatives(bent_mm(6)));
    CHECK_FALSE(oracle::bent_by_derivatives(BoolFunc::constant(4, 0)));
}

TEST_CASE("the oracle scale guard refuses big inputs") {
    CHECK_THROWS_AS(oracle::walsh_naive(BoolFunc::constant(11, 0)), std::domain_error);
    CHECK_THROWS_AS(
        oracle::apn_by_definition(VectorialFunc{11, std::vector<uint32_t>(2048, 0)}),
        std::domain_error);
}
