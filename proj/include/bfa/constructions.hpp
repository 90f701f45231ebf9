#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bfa/boolfunc.hpp"
#include "bfa/gf2n.hpp"
#include "bfa/vbf.hpp"

namespace bfa {

// f = x_(n+1) g + h on n+1 variables, with the inputs recorded; satisfies
// w(f) = w(g+h) + w(h), which the constructor asserts.
struct SplitSum {
    BoolFunc g;
    BoolFunc h;
    BoolFunc f;
};
SplitSum split_sum(const BoolFunc& g, const BoolFunc& h);

// f = x_(n+1) g + (1 + x_(n+1)) h on n+1 variables: f restricted to
// x_(n+1)=1 is g and to x_(n+1)=0 is h, so w(f) = w(g) + w(h) (asserted).
struct ConvProduct {
    BoolFunc g;
    BoolFunc h;
    BoolFunc f;
};
ConvProduct conv_product(const BoolFunc& g, const BoolFunc& h);

// Balanced construction x_(n+1)(g~ + x_n) + (h~ + x_(n-1)) from g~ on n-1
// and h~ on n-2 variables; the result (on n+1 variables) is always balanced,
// which the constructor asserts.
SplitSum construction_1(const BoolFunc& g_tilde, const BoolFunc& h_tilde);

// Layered construction on n variables from inner functions g~_i on the
// variable windows (x_(i+1), ..., x_(n-i)), i = 1..l, each embedded as
// g_i = g~_i + x_(n-i+1):
//   Balanced variant:    sum_(i<l) x_i g_i + g_l       (always balanced)
//   Unbalanced variant:  sum_(i<=l) x_i g_i + c        (always unbalanced)
enum class Construction2Variant { Balanced, Unbalanced };
BoolFunc construction_2(int n, const std::vector<BoolFunc>& inner,
                        Construction2Variant variant, int constant_bit = 0);

// For quadratic g, h with cubic convolutional product f: returns whether f
// is balanced and asserts the classification (balanced iff both balanced,
// or both unbalanced quadratics with g equivalent to h+1).
bool cubic_conv_balanced_test(const BoolFunc& g, const BoolFunc& h);

// Derivative of a split sum along lambda = (a, a_(n+1)): the direct
// derivative equals x_(n+1) D_a g + a_(n+1) g + D_a h composed with
// x_(n+1) -> x_(n+1) + a_(n+1), exactly.
struct DerivativeDecomposition {
    BoolFunc direct;
    BoolFunc composed;
    bool equal = false;
};
DerivativeDecomposition derivative_decomposition(const SplitSum& ss, uint32_t lambda);

// Affinity x -> Mx + w over F_2; rows[i] is the mask of row i of M.
struct Affinity {
    int n = 0;
    std::vector<uint32_t> rows;
    uint32_t shift = 0;

    static Affinity identity(int n);
    uint32_t operator()(uint32_t x) const;
};
bool is_invertible(const Affinity& phi);
// f composed with phi: result(x) = f(Mx + w). Throws on a singular matrix.
BoolFunc compose(const BoolFunc& f, const Affinity& phi);

// The inner-product quadratic x_1 x_2 + ... + x_(n-1) x_n (even n), bent;
// optionally composed with an invertible affinity. Certified bent before
// returning.
BoolFunc bent_mm(int n);
BoolFunc bent_mm(int n, const Affinity& phi);

// Recipes whose outputs are certified to have trivial linear space.
enum class Recipe {
    SplitBentG,             // split sum with g bent, n even
    ConvBentQuadraticPair,  // conv product of bent quadratics with g ~ h+1, cubic
    ConvBentPair,           // conv product of bent g, h with deg f = max deg + 1
};

struct Certificate {
    struct Clause {
        std::string name;
        bool pass = false;
        std::string detail;
    };
    std::vector<Clause> clauses;
    bool pass = false;
    // nonzero linear structure, when the trivial-space clause fails
    std::optional<uint32_t> witness;
};
Certificate trivial_linear_space_certify(const SplitSum& ss, Recipe recipe);
Certificate trivial_linear_space_certify(const ConvProduct& cp, Recipe recipe);

// The power map x^(2^k+1) compiled over the given field.
VectorialFunc gold(int n, int k, const FieldSpec& field);

// Named quadratic APN functions pinned to their field presentation, kept as
// polynomial text in the external grammar.
struct CatalogEntry {
    std::string name;
    FieldSpec field;
    std::string poly_text;
};
const std::vector<CatalogEntry>& catalog_entries();
UnivariatePoly catalog_poly(const std::string& name);
VectorialFunc catalog(const std::string& name);
// Same entry with the literal 'z' in the text bound to another element
// (for primitive-element fallback scans).
VectorialFunc catalog_with_generator(const std::string& name, uint32_t z_value);

// A polynomial file: '#' comment lines, then "field: <spec>" and
// "poly: <polynomial>" lines.
struct LoadedPoly {
    FieldSpec field;
    UnivariatePoly poly;
};
LoadedPoly load_poly_file(const std::string& path);

}  // namespace bfa
