#include <doctest.h>

#include <numeric>
#include <random>

#include "bfa/boolfunc.hpp"
#include "bfa/gf2n.hpp"
#include "bfa/vbf.hpp"

using namespace bfa;

TEST_CASE("field construction and validation") {
    const FieldSpec gf4 = FieldSpec::with_modulus(2, 0b111);
    CHECK(gf4.mul(2, 2) == 3);  // z^2 = z + 1

    // x^4 + x^2 + 1 = (x^2 + x + 1)^2
    try {
        FieldSpec::with_modulus(4, 0b10101);
        FAIL("expected a reducible-modulus error");
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("0b111") != std::string::npos);
    }

    const FieldSpec gf64 = FieldSpec::conway(6);
    CHECK(gf64.modulus() == 0b1011011);
    CHECK(gf64.generator() == 2);
    CHECK(gf64.order(2) == 63);

    CHECK(FieldSpec::conway(4).modulus() == 0b10011);
    CHECK(FieldSpec::conway(8).modulus() == 0b100011101);
}

TEST_CASE("every built-in modulus is irreducible with primitive z") {
    for (int n = 2; n <= 16; ++n) {
        const FieldSpec f = FieldSpec::conway(n);
        CHECK(f.generator() == 2);
        CHECK(f.order(2) == f.size() - 1);
    }
}

TEST_CASE("multiplication and exponentiation") {
    const FieldSpec f = FieldSpec::conway(8);
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 200; ++trial) {
        const uint32_t a = uint32_t(rng()) & 255;
        CHECK(f.mul(a, 1) == a);
        CHECK(f.mul(a, 0) == 0);
        if (a != 0) {
            CHECK(f.pow(a, 255) == 1);  // Lagrange
            // cross-check pow against repeated multiplication
            uint32_t by_mul = 1;
            const uint64_t e = rng() % 300;
            for (uint64_t i = 0; i < e; ++i) by_mul = f.mul(by_mul, a);
            CHECK(f.pow(a, e) == by_mul);
        }
    }
    CHECK(f.pow(0, 0) == 1);
    CHECK(f.pow(0, 7) == 0);
}

TEST_CASE("field axioms on sampled triples") {
    std::mt19937_64 rng(43);
    for (int n : {2, 3, 4}) {
        const FieldSpec f = FieldSpec::conway(n);
        for (uint32_t a = 0; a < f.size(); ++a)
            for (uint32_t b = 0; b < f.size(); ++b)
                for (uint32_t c = 0; c < f.size(); ++c) {
                    CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
                    CHECK(f.mul(a, b ^ c) == (f.mul(a, b) ^ f.mul(a, c)));
                }
    }
    for (int n : {5, 6, 7, 8}) {
        const FieldSpec f = FieldSpec::conway(n);
        const uint32_t mask = f.size() - 1;
        for (int trial = 0; trial < 100000; ++trial) {
            const uint32_t a = uint32_t(rng()) & mask;
            const uint32_t b = uint32_t(rng()) & mask;
            const uint32_t c = uint32_t(rng()) & mask;
            CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
            CHECK(f.mul(a, b ^ c) == (f.mul(a, b) ^ f.mul(a, c)));
        }
    }
}

TEST_CASE("trace") {
    const FieldSpec gf4 = FieldSpec::conway(2);
    CHECK(gf4.trace(0) == 0);
    CHECK(gf4.trace(2) == 1);  // Tr(z) = z + z^2 = 1

    for (int n = 2; n <= 8; ++n) {
        const FieldSpec f = FieldSpec::conway(n);
        uint32_t ones = 0;
        for (uint32_t a = 0; a < f.size(); ++a) ones += uint32_t(f.trace(a));
        CHECK(ones == f.size() / 2);  // the trace is balanced
        uint32_t additivity_violations = 0;
        for (uint32_t a = 0; a < f.size(); ++a)
            for (uint32_t b = 0; b < f.size(); ++b)
                if ((f.trace(a) ^ f.trace(b)) != f.trace(a ^ b)) ++additivity_violations;
        CHECK(additivity_violations == 0);
        // definition cross-check: sum of Frobenius conjugates
        for (uint32_t a = 0; a < f.size(); ++a) {
            uint32_t acc = a, p = a;
            for (int j = 1; j < n; ++j) {
                p = f.mul(p, p);
                acc ^= p;
            }
            CHECK(acc == uint32_t(f.trace(a)));
        }
    }
    CHECK(FieldSpec::conway(6).trace(0) == 0);
}

TEST_CASE("gcd facts for 2^n-1 vs 2^k+1") {
    CHECK(gcd_pow2(6, 2).m == 2);
    CHECK(gcd_pow2(6, 2).e == 1);  // 6/2 = 3 odd
    CHECK(gcd_pow2(4, 1).m == 1);
    CHECK(gcd_pow2(4, 1).e == 3);  // 4/1 even
    CHECK(gcd_pow2(6, 3).m == 3);
    CHECK(gcd_pow2(6, 3).s == 6);
    CHECK(gcd_pow2(6, 3).e == 9);

    for (int n = 1; n <= 16; ++n)
        for (int k = 1; k <= n; ++k) {
            const GcdPow2 g = gcd_pow2(n, k);
            const uint64_t direct =
                std::gcd((uint64_t(1) << n) - 1, (uint64_t(1) << k) + 1);
            CHECK(g.e == direct);
            CHECK(g.m == uint64_t(std::gcd(n, k)));
            CHECK(g.s == uint64_t(std::gcd(n, 2 * k)));
        }
    CHECK_THROWS_AS(gcd_pow2(0, 1), std::domain_error);
}

TEST_CASE("polynomial parsing") {
    const FieldSpec f = FieldSpec::conway(6);
    const UnivariatePoly p = UnivariatePoly::parse(f, "x^3 + z^11*x^5 + 1");
    REQUIRE(p.terms().size() == 3);
    CHECK(p.terms()[0].exponent == 0);
    CHECK(p.terms()[0].coeff == 1);
    CHECK(p.terms()[1].exponent == 3);
    CHECK(p.terms()[2].exponent == 5);
    CHECK(p.terms()[2].coeff == f.pow(2, 11));
    CHECK(p.algebraic_degree() == 2);

    CHECK(UnivariatePoly::parse(f, "x").terms()[0].exponent == 1);
    CHECK(UnivariatePoly::parse(f, "z").terms()[0].coeff == 2);
    CHECK(UnivariatePoly::parse(f, " z^3 * x^9 ").terms()[0].coeff == f.pow(2, 3));

    // duplicate exponents combine by field addition
    CHECK(UnivariatePoly::parse(f, "x^3 + x^3").terms().empty());
    CHECK(UnivariatePoly::parse(f, "z*x^3 + z^1*x^3").terms().empty());

    CHECK_THROWS_AS(UnivariatePoly::parse(f, "x^64"), ParseError);
    CHECK_THROWS_AS(UnivariatePoly::parse(f, "x^3 +"), ParseError);
    CHECK_THROWS_AS(UnivariatePoly::parse(f, "y^3"), ParseError);
    CHECK_THROWS_AS(UnivariatePoly::parse(f, ""), ParseError);

    // to_string round trip
    const UnivariatePoly q = UnivariatePoly::parse(f, "x^3+z^11*x^5+z^13*x^9");
    const UnivariatePoly round = UnivariatePoly::parse(f, q.to_string());
    CHECK(round.terms().size() == q.terms().size());
    for (size_t i = 0; i < q.terms().size(); ++i) {
        CHECK(round.terms()[i].coeff == q.terms()[i].coeff);
        CHECK(round.terms()[i].exponent == q.terms()[i].exponent);
    }
}

TEST_CASE("field spec strings") {
    const FieldSpec a = FieldSpec::parse("n=6,mod=conway");
    const FieldSpec b = FieldSpec::parse("n=6,mod=0b1011011");
    CHECK(a == b);
    CHECK(FieldSpec::parse("n=6") == a);
    CHECK(FieldSpec::parse(a.to_string()) == a);
    CHECK_THROWS_AS(FieldSpec::parse("mod=conway"), ParseError);
    CHECK_THROWS_AS(FieldSpec::parse("n=6,mod=banana"), ParseError);
    CHECK_THROWS_AS(FieldSpec::parse("n=6,mod=0b1011012"), ParseError);
}

TEST_CASE("field elements carry their field") {
    const FieldSpec f4 = FieldSpec::conway(4);
    const FieldSpec f6 = FieldSpec::conway(6);
    const FieldElement a(f4, 5);
    const FieldElement b(f4, 9);
    CHECK((a * b).bits() == f4.mul(5, 9));
    CHECK((a + b).bits() == (5 ^ 9));
    CHECK(a.pow(15).bits() == 1);
    CHECK_THROWS_AS(a * FieldElement(f6, 5), std::domain_error);
    CHECK_THROWS_AS(FieldElement(f4, 16), std::invalid_argument);
}

TEST_CASE("compiling polynomials to tables") {
    const FieldSpec f4 = FieldSpec::conway(4);
    const VectorialFunc identity = compile(UnivariatePoly::parse(f4, "x"));
    for (uint32_t x = 0; x < 16; ++x) CHECK(identity(x) == x);

    // x^3 over GF(2^4) is 3-to-1 on nonzero inputs
    const VectorialFunc cube = compile(UnivariatePoly::parse(f4, "x^3"));
    CHECK(image(cube).size() == 6);  // 1 + 15/3
    std::vector<int> hits(16, 0);
    for (uint32_t x = 1; x < 16; ++x) ++hits[cube(x)];
    for (uint32_t y = 0; y < 16; ++y)
        if (hits[y]) CHECK((y != 0 ? hits[y] == 3 : hits[y] == 0));

    // term evaluation equals repeated multiplication at every point
    std::mt19937_64 rng(47);
    for (int n : {2, 3, 4, 5, 6, 7, 8}) {
        const FieldSpec f = FieldSpec::conway(n);
        std::vector<PolyTerm> terms;
        for (int t = 0; t < 4; ++t)
            terms.push_back({uint32_t(rng() % (f.size() - 1)) + 1,
                             uint32_t(rng() % f.size())});
        const UnivariatePoly p(f, terms);
        const VectorialFunc F = compile(p);
        for (uint32_t x = 0; x < f.size(); ++x) {
            uint32_t expect = 0;
            for (const PolyTerm& t : p.terms()) {
                uint32_t power = t.exponent == 0 ? 1 : x;
                for (uint32_t i = 1; i < t.exponent; ++i) power = f.mul(power, x);
                if (t.exponent > 0 && x == 0) power = 0;
                expect ^= f.mul(t.coeff, power);
            }
            CHECK(F(x) == expect);
        }
    }
}
