#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bfa {

struct VectorialFunc;  // vbf.hpp

// GF(2^n) presented by an irreducible modulus over F_2 (bit i = coefficient
// of x^i, bit n set). Elements are coefficient vectors in the polynomial
// basis {1, z, ..., z^(n-1)} packed as integers, coefficient of z^i at bit i.
// The generator is an element of verified multiplicative order 2^n - 1; for
// the built-in Conway moduli it is z itself (value 2).
class FieldSpec {
public:
    // Verifies irreducibility by exhaustive factor search and locates the
    // least primitive element. Throws std::invalid_argument (naming a factor)
    // on a reducible modulus.
    static FieldSpec with_modulus(int n, uint32_t modulus);
    // The built-in Conway polynomial for 1 <= n <= 16.
    static FieldSpec conway(int n);
    static uint32_t conway_modulus(int n);
    // "n=6,mod=conway" or "n=6,mod=0b1011011"
    static FieldSpec parse(std::string_view text);

    int n() const { return n_; }
    uint32_t size() const { return uint32_t(1) << n_; }
    uint32_t modulus() const { return modulus_; }
    uint32_t generator() const { return generator_; }

    // carry-less product reduced by the modulus
    uint32_t mul(uint32_t a, uint32_t b) const;
    // square-and-multiply; the exponent acts mod 2^n - 1 for a nonzero base;
    // 0^0 = 1 by convention and 0^e = 0 for e > 0
    uint32_t pow(uint32_t a, uint64_t e) const;
    // absolute trace, in {0, 1}; linear over F_2
    int trace(uint32_t a) const;
    // multiplicative order; a must be nonzero
    uint32_t order(uint32_t a) const;
    bool is_primitive(uint32_t a) const { return a != 0 && order(a) == size() - 1; }

    std::string to_string() const;  // "n=6,mod=0b1011011"

    bool operator==(const FieldSpec& o) const {
        return n_ == o.n_ && modulus_ == o.modulus_;
    }

private:
    FieldSpec(int n, uint32_t modulus, uint32_t generator, uint32_t trace_mask)
        : n_(n), modulus_(modulus), generator_(generator), trace_mask_(trace_mask) {}

    int n_;
    uint32_t modulus_;
    uint32_t generator_;
    uint32_t trace_mask_;  // bit i = Tr(z^i); trace is F_2-linear
};

// An element bound to its field; mixed-field arithmetic throws
// std::domain_error. Hot paths should use the raw FieldSpec operations.
class FieldElement {
public:
    FieldElement(const FieldSpec& field, uint32_t bits);

    uint32_t bits() const { return bits_; }
    const FieldSpec& field() const { return field_; }

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement pow(uint64_t e) const;
    int trace() const { return field_.trace(bits_); }

    bool operator==(const FieldElement& o) const {
        return field_ == o.field_ && bits_ == o.bits_;
    }

private:
    FieldSpec field_;
    uint32_t bits_;
};

// gcd facts for 2^n - 1 against 2^k + 1: m = (n, k), s = (n, 2k),
// e = (2^n - 1, 2^k + 1), which is 1 when n/m is odd and 2^m + 1 otherwise.
struct GcdPow2 {
    uint64_t m;
    uint64_t s;
    uint64_t e;
};
GcdPow2 gcd_pow2(int n, int k);

// A sparse univariate polynomial over GF(2^n) in the variable x: nonzero
// coefficients paired with distinct exponents in [0, 2^n - 1].
struct PolyTerm {
    uint32_t coeff;     // field element, nonzero
    uint32_t exponent;
};

class UnivariatePoly {
public:
    // Normalizes: combines duplicate exponents (field addition) and drops
    // zero coefficients. Exponents outside [0, 2^n - 1] are rejected.
    UnivariatePoly(const FieldSpec& field, std::vector<PolyTerm> terms);

    // Grammar: terms joined by '+', each term z^A*x^B | z^A | x^B | x | 1,
    // decimal exponents, whitespace ignored. 'z' denotes `z_value` (the
    // field generator by default). Throws ParseError with a position.
    static UnivariatePoly parse(const FieldSpec& field, std::string_view text,
                                std::optional<uint32_t> z_value = std::nullopt);

    const FieldSpec& field() const { return field_; }
    const std::vector<PolyTerm>& terms() const { return terms_; }

    // max binary weight of an exponent with nonzero coefficient
    int algebraic_degree() const;
    uint32_t evaluate(uint32_t x) const;
    std::string to_string() const;

private:
    FieldSpec field_;
    std::vector<PolyTerm> terms_;  // sorted by ascending exponent
};

// Evaluates the polynomial at every field element; output words use the
// coefficient-vector integer encoding.
VectorialFunc compile(const UnivariatePoly& p);

}  // namespace bfa
