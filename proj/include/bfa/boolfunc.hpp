#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bfa {

// Thrown by the text parsers (ANF strings, hex truth tables, polynomial and
// field-spec strings); `position` is the offset of the offending character.
struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, size_t position)
        : std::runtime_error(msg), position(position) {}
    size_t position;
};

// A Boolean function f: F_2^n -> F_2 stored as a 2^n-entry truth table.
// Index convention: input (x_1,...,x_n) maps to the integer with x_1 as the
// least-significant bit, so f(x) = table[x_1 + 2*x_2 + ... + 2^(n-1)*x_n].
class BoolFunc {
public:
    BoolFunc() : n_(0), table_(1, 0) {}
    BoolFunc(int n, std::vector<uint8_t> table);

    static BoolFunc constant(int n, int value);

    int n() const { return n_; }
    uint32_t size() const { return uint32_t(1) << n_; }
    uint8_t operator()(uint32_t x) const { return table_[x]; }
    const std::vector<uint8_t>& table() const { return table_; }

    // pointwise XOR; operands must share n
    BoolFunc operator+(const BoolFunc& g) const;
    // XOR with a constant (complement when c is odd)
    BoolFunc operator+(int c) const;

    bool operator==(const BoolFunc&) const = default;

private:
    int n_;
    std::vector<uint8_t> table_;
};

// Shape-checked constructor: bits must have exactly 2^n entries, n <= 16.
BoolFunc from_truth_table(int n, const std::vector<uint8_t>& bits);

uint32_t weight(const BoolFunc& f);
bool is_balanced(const BoolFunc& f);

// Algebraic normal form: the set of monomials with coefficient 1, each
// encoded as an n-bit mask of participating variables (x_i -> bit i-1).
struct Anf {
    int n = 0;
    std::vector<uint32_t> monomials;  // sorted ascending, no duplicates

    bool operator==(const Anf&) const = default;
};

Anf anf(const BoolFunc& f);           // binary Moebius transform
BoolFunc truth_table(const Anf& a);   // inverse (same transform)
int degree(const Anf& a);             // max popcount; 0 for the zero function
int degree(const BoolFunc& f);

// Walsh transform W_f(a) = sum_x (-1)^(f(x) + a.x), all 2^n entries.
struct WalshSpectrum {
    int n = 0;
    std::vector<int64_t> values;

    int64_t max_abs() const;
    // distinct values attained, sorted ascending
    std::vector<int64_t> distinct() const;
};

WalshSpectrum walsh(const BoolFunc& f);          // butterfly, O(n 2^n)
int64_t nonlinearity(const BoolFunc& f);         // 2^(n-1) - max|W|/2
int64_t nonlinearity(const WalshSpectrum& w);

// D_a f(x) = f(x + a) + f(x)
BoolFunc derivative(const BoolFunc& f, uint32_t a);

// V(f): the directions a with D_a f constant, as a subspace of F_2^n.
struct LinearSpace {
    int n = 0;
    int dim = 0;
    std::vector<uint32_t> basis;  // row-reduced echelon form over F_2
    // every element of V(f) with the constant value of its derivative,
    // sorted by element; always contains (0, 0)
    std::vector<std::pair<uint32_t, uint8_t>> constants;

    bool contains(uint32_t a) const;
};

LinearSpace linear_space(const BoolFunc& f);  // exhaustive 2^n shift scan
int linear_space_dim(const BoolFunc& f);      // same scan, dimension only
bool sigma_one(const BoolFunc& f);            // true iff dim V(f) >= 1

// Gamma(f): the directions a with D_a f balanced, sorted ascending.
std::vector<uint32_t> gamma_set(const BoolFunc& f);

enum class SpectrumClass { Bent, SemiBent, Plateaued, Other };

struct Classification {
    SpectrumClass cls = SpectrumClass::Other;
    // bent: 2^(n/2); semi-bent: 2^((n+1)/2) or 2^((n+2)/2) by parity;
    // plateaued: the amplitude mu; other: 0
    int64_t amplitude = 0;

    bool operator==(const Classification&) const = default;
};

// Spectrum taxonomy. Bent requires even n and |W| = 2^(n/2) everywhere;
// semi-bent follows the parity-dependent rule; plateaued(mu) covers any
// spectrum inside {0, +-mu}; anything else is Other. Never guesses: a
// spectrum with more than three distinct absolute values is Other, and
// bent is never reported for odd n.
Classification classify(const WalshSpectrum& w);
Classification classify(const BoolFunc& f);

const char* to_string(SpectrumClass cls);

// Equivalence test for unbalanced quadratics: w(g) = w(h) and N(g) = N(h).
// Throws std::domain_error unless both inputs are unbalanced functions of
// degree exactly 2 on the same number of variables.
bool quad_equiv(const BoolFunc& g, const BoolFunc& h);

// --- serialization ------------------------------------------------------

// Lowercase hex, most-significant digit covers the highest indices; length
// exactly 2^n/4 digits. Requires n >= 2.
std::string to_hex(const BoolFunc& f);
// Accepts an optional "0x" prefix. When n is given the digit count must be
// exactly 2^n/4; otherwise n is inferred from the length.
BoolFunc from_hex(std::string_view hex, std::optional<int> n = std::nullopt);

// "x1*x2 + x3 + 1" with 1-based variables; monomials ordered by descending
// degree then ascending mask; the zero function prints as "0".
std::string to_anf_string(const Anf& a);
// Parses the same grammar. When n is absent it is inferred from the highest
// variable index. Throws ParseError with a position on malformed input.
Anf parse_anf(std::string_view text, std::optional<int> n = std::nullopt);

}  // namespace bfa
