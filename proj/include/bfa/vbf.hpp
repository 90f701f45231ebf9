#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bfa/boolfunc.hpp"
#include "bfa/gf2n.hpp"

namespace bfa {

// A map F: F_2^n -> F_2^n stored as 2^n output words, entry idx(x) = F(x),
// under the same index convention as BoolFunc.
struct VectorialFunc {
    int n = 0;
    std::vector<uint32_t> outputs;

    uint32_t size() const { return uint32_t(1) << n; }
    uint32_t operator()(uint32_t x) const { return outputs[x]; }

    bool operator==(const VectorialFunc&) const = default;
};

// Shape- and range-checked constructor.
VectorialFunc vectorial_from_outputs(int n, std::vector<uint32_t> outputs);

// The component f(x) = lambda . F(x) (dot product over F_2); lambda = 0 is
// not a component and throws std::domain_error.
BoolFunc component(const VectorialFunc& F, uint32_t lambda);

// The dot-product index of the trace component Tr(alpha F): bit i of the
// result is Tr(alpha z^i), so that Tr(alpha F(x)) = trace_lambda(alpha) . F(x).
uint32_t trace_lambda(const FieldSpec& field, uint32_t alpha);

// Trace component Tr(alpha F); enumerates the same set as `component`.
BoolFunc component_trace(const VectorialFunc& F, const FieldSpec& field, uint32_t alpha);

// Difference distribution table: counts delta_F(a, b) = |{x : F(x+a)+F(x) = b}|.
struct Ddt {
    int n = 0;
    std::vector<uint32_t> counts;  // 2^n x 2^n, row-major in a
    uint32_t uniformity = 0;       // max over a != 0 of the row maxima

    uint32_t at(uint32_t a, uint32_t b) const { return counts[(size_t(a) << n) | b]; }
};

// Materializes the full table; guarded to n <= 12 (4^n counters).
Ddt ddt(const VectorialFunc& F);
// Streaming row-at-a-time maximum; works for every supported n.
uint32_t differential_uniformity(const VectorialFunc& F);
// Early-exit check for uniformity == 2.
bool is_apn(const VectorialFunc& F);

bool is_permutation(const VectorialFunc& F);
std::vector<uint32_t> image(const VectorialFunc& F);  // sorted distinct outputs
int degree(const VectorialFunc& F);                   // max component degree
// First lambda whose component degree differs from 2, if any.
std::optional<uint32_t> non_quadratic_component(const VectorialFunc& F);

// Fourth-moment characterization: sum over nonzero lambda and all a of
// W_{D_a F_lambda}(0)^2, against the universal bound 2^(2n+1) (2^n - 1).
// The bound is met by every F; equality holds exactly for APN functions.
struct ApnSumCheck {
    uint64_t sum = 0;
    bool meets_bound = false;
    bool equality = false;
};
ApnSumCheck apn_sum_check(const VectorialFunc& F);

// For a pure quadratic Q: sum over nonzero lambda of (2^dim V_lambda - 1),
// at least 2^n - 1 with equality exactly for APN. Components of degree != 2
// raise std::domain_error naming the offending lambda.
struct QuadraticSumCheck {
    uint64_t sum_linear = 0;
    bool is_apn_equiv = false;
};
QuadraticSumCheck quadratic_sum_check(const VectorialFunc& Q);

// Census classes: the spectrum taxonomy plus the degenerate components that
// power functions can produce.
enum class ComponentClass { Constant, Affine, Bent, SemiBent, Plateaued, Other };
const char* to_string(ComponentClass cls);

struct ComponentInfo {
    uint32_t lambda = 0;
    int dim_v = 0;
    ComponentClass cls = ComponentClass::Other;
    int64_t max_abs_w = 0;
};

struct CensusReport {
    int n = 0;
    std::vector<ComponentInfo> per_component;  // index lambda - 1
    int64_t bent_count = 0;                    // B
    int64_t nonbent_count = 0;                 // N = 2^n - 1 - B
    uint64_t sum_linear = 0;                   // sum of (2^dim V_lambda - 1)
    std::vector<int64_t> spectrum;             // attained Walsh values, sorted
    uint32_t uniformity = 0;
    // B = 2(2^n-1)/3 + 4t when n is even and the difference is a nonnegative
    // multiple of 4; otherwise absent ("outside the quadratic-APN law").
    std::optional<int64_t> t;
    bool pure_quadratic = false;

    int64_t max_abs_walsh() const;
    int64_t min_component_nonlinearity() const;
};

CensusReport census(const VectorialFunc& F);

// Nonlinearity prediction for a pure quadratic APN in even dimension:
// 2^(n-1) - 2^(n/2) at t = 0 and 2^(n-1) - 2^(n/2+1) for 1 <= t <= 4;
// t >= 5 is out of range (prediction absent, measurement still returned).
struct NonlinearityCheck {
    int64_t t = 0;
    int64_t measured = 0;
    std::optional<int64_t> predicted;
    bool in_range = false;
    bool matches = false;
};
NonlinearityCheck apn_nonlinearity_check(const VectorialFunc& Q);

// Scan for a component with trivial linear space; APN functions in even
// dimension always have one.
struct TrivialComponentScan {
    bool found = false;
    uint32_t witness = 0;  // least such lambda
    uint32_t count = 0;
};
TrivialComponentScan trivial_component_exists(const VectorialFunc& F);

// Diagnostics for APN permutations in even dimension: every component must
// have dim V <= 1 and every constant nonzero derivative must equal 1.
// Reports rather than throws; when the hypotheses fail, `unmet` names the
// first failing one and the scans still run.
struct PermutationDiagnostics {
    bool hypotheses_met = false;
    std::string unmet;
    bool all_dims_at_most_one = true;
    int max_dim = 0;
    uint32_t max_dim_lambda = 0;
    bool constant_derivatives_all_one = true;
    // (lambda, a) with a != 0 and D_a F_lambda identically 0
    std::vector<std::pair<uint32_t, uint32_t>> zero_derivative_witnesses;
};
PermutationDiagnostics apn_permutation_diagnostics(const VectorialFunc& F);

// Full analysis of the power function x^(2^k+1) over the given field:
// predictions from the gcd facts against exhaustive measurements.
struct PowerAnalysis {
    int n = 0;
    int k = 0;
    uint64_t d = 0;  // 2^k + 1
    uint64_t m = 0, s = 0, e = 0;

    uint64_t image_size_predicted = 0;  // 1 + (2^n - 1)/e
    uint64_t image_size_measured = 0;
    bool is_permutation_predicted = false;  // e == 1
    bool is_permutation_measured = false;
    std::optional<bool> is_apn_predicted;   // e == 3 && s == 2; even n only
    bool is_apn_measured = false;

    // census block, filled for even n only
    bool census_checked = false;
    int64_t bent_predicted = 0;  // (e-1)(2^n-1)/e
    int64_t bent_measured = 0;
    std::vector<int64_t> spectrum_predicted;  // signed superset
    std::vector<int64_t> spectrum_measured;
    bool bent_set_matches = false;  // bent components == {Tr(alpha F) : alpha not in Im F}
    bool spectrum_matches = false;  // measured within predicted, same |W| values

    bool ok() const;
};
PowerAnalysis power_analyze(int n, int k, const FieldSpec& field);

}  // namespace bfa
