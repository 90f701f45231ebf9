#include "bfa/vbf.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace bfa {

namespace {

int parity(uint32_t x) { return std::popcount(x) & 1; }

// truth table of lambda . F without the BoolFunc wrapper
std::vector<uint8_t> component_table(const VectorialFunc& F, uint32_t lambda) {
    std::vector<uint8_t> t(F.size());
    for (uint32_t x = 0; x < F.size(); ++x) t[x] = uint8_t(parity(lambda & F(x)));
    return t;
}

}  // namespace

VectorialFunc vectorial_from_outputs(int n, std::vector<uint32_t> outputs) {
    if (n < 1 || n > 16)
        throw std::invalid_argument("VectorialFunc: dimension must be in [1, 16]");
    if (outputs.size() != size_t(1) << n)
        throw std::invalid_argument("VectorialFunc: expected exactly 2^n output words");
    for (uint32_t y : outputs)
        if (y >> n)
            throw std::invalid_argument("VectorialFunc: output word exceeds n bits");
    return VectorialFunc{n, std::move(outputs)};
}

BoolFunc component(const VectorialFunc& F, uint32_t lambda) {
    if (lambda == 0)
        throw std::domain_error("component: the zero combination is not a component");
    if (lambda >= F.size())
        throw std::domain_error("component: lambda must have n bits");
    return BoolFunc(F.n, component_table(F, lambda));
}

uint32_t trace_lambda(const FieldSpec& field, uint32_t alpha) {
    uint32_t lambda = 0;
    for (int i = 0; i < field.n(); ++i)
        lambda |= uint32_t(field.trace(field.mul(alpha, uint32_t(1) << i))) << i;
    return lambda;
}

BoolFunc component_trace(const VectorialFunc& F, const FieldSpec& field, uint32_t alpha) {
    if (field.n() != F.n)
        throw std::domain_error("component_trace: field degree does not match F");
    if (alpha == 0)
        throw std::domain_error("component_trace: the zero combination is not a component");
    std::vector<uint8_t> t(F.size());
    for (uint32_t x = 0; x < F.size(); ++x)
        t[x] = uint8_t(field.trace(field.mul(alpha, F(x))));
    return BoolFunc(F.n, std::move(t));
}

// --- DDT ---------------------------------------------------------------------

Ddt ddt(const VectorialFunc& F) {
    if (F.n > 12)
        throw std::domain_error("ddt: full table limited to n <= 12; use differential_uniformity");
    Ddt d;
    d.n = F.n;
    d.counts.assign(size_t(1) << (2 * F.n), 0);
    for (uint32_t a = 0; a < F.size(); ++a) {
        uint32_t* row = d.counts.data() + (size_t(a) << F.n);
        for (uint32_t x = 0; x < F.size(); ++x) ++row[F(x) ^ F(x ^ a)];
        if (a != 0)
            for (uint32_t b = 0; b < F.size(); ++b) d.uniformity = std::max(d.uniformity, row[b]);
    }
    return d;
}

uint32_t differential_uniformity(const VectorialFunc& F) {
    std::vector<uint32_t> row(F.size());
    uint32_t best = 0;
    for (uint32_t a = 1; a < F.size(); ++a) {
        std::fill(row.begin(), row.end(), 0);
        for (uint32_t x = 0; x < F.size(); ++x)
            best = std::max(best, ++row[F(x) ^ F(x ^ a)]);
    }
    return best;
}

bool is_apn(const VectorialFunc& F) {
    std::vector<uint32_t> row(F.size());
    for (uint32_t a = 1; a < F.size(); ++a) {
        std::fill(row.begin(), row.end(), 0);
        for (uint32_t x = 0; x < F.size(); ++x)
            if (++row[F(x) ^ F(x ^ a)] > 2) return false;
    }
    return true;
}

// --- basic structure -----------------------------------------------------------

bool is_permutation(const VectorialFunc& F) {
    std::vector<uint8_t> seen(F.size(), 0);
    for (uint32_t x = 0; x < F.size(); ++x) {
        if (seen[F(x)]) return false;
        seen[F(x)] = 1;
    }
    return true;
}

std::vector<uint32_t> image(const VectorialFunc& F) {
    std::vector<uint8_t> seen(F.size(), 0);
    for (uint32_t x = 0; x < F.size(); ++x) seen[F(x)] = 1;
    std::vector<uint32_t> out;
    for (uint32_t y = 0; y < F.size(); ++y)
        if (seen[y]) out.push_back(y);
    return out;
}

int degree(const VectorialFunc& F) {
    // the coordinates attain the maximum over all components
    int d = 0;
    for (int i = 0; i < F.n; ++i)
        d = std::max(d, degree(component(F, uint32_t(1) << i)));
    return d;
}

std::optional<uint32_t> non_quadratic_component(const VectorialFunc& F) {
    for (uint32_t lam = 1; lam < F.size(); ++lam)
        if (degree(component(F, lam)) != 2) return lam;
    return std::nullopt;
}

// --- fourth-moment APN characterization -----------------------------------------

ApnSumCheck apn_sum_check(const VectorialFunc& F) {
    const int n = F.n;
    // sum_a W_{D_a f}(0)^2 = 2^-n sum_w W_f(w)^4 (autocorrelation Parseval)
    unsigned __int128 total = 0;
    for (uint32_t lam = 1; lam < F.size(); ++lam) {
        const WalshSpectrum w = walsh(BoolFunc(n, component_table(F, lam)));
        unsigned __int128 fourth = 0;
        for (int64_t v : w.values) {
            const uint64_t sq = uint64_t(v * v);
            fourth += (unsigned __int128)sq * sq;
        }
        total += fourth >> n;
    }
    ApnSumCheck r;
    r.sum = uint64_t(total);
    const uint64_t bound = (uint64_t(1) << (2 * n + 1)) * (F.size() - 1);
    r.meets_bound = r.sum >= bound;
    r.equality = r.sum == bound;
    return r;
}

QuadraticSumCheck quadratic_sum_check(const VectorialFunc& Q) {
    QuadraticSumCheck r;
    for (uint32_t lam = 1; lam < Q.size(); ++lam) {
        const BoolFunc f(Q.n, component_table(Q, lam));
        if (const int d = degree(f); d != 2)
            throw std::domain_error("quadratic_sum_check: component " + std::to_string(lam) +
                                    " has degree " + std::to_string(d) +
                                    ", input is not pure quadratic");
        r.sum_linear += (uint64_t(1) << linear_space_dim(f)) - 1;
    }
    r.is_apn_equiv = r.sum_linear == Q.size() - 1;
    return r;
}

// --- census ----------------------------------------------------------------------

const char* to_string(ComponentClass cls) {
    switch (cls) {
        case ComponentClass::Constant: return "constant";
        case ComponentClass::Affine: return "affine";
        case ComponentClass::Bent: return "bent";
        case ComponentClass::SemiBent: return "semi-bent";
        case ComponentClass::Plateaued: return "plateaued";
        case ComponentClass::Other: return "other";
    }
    return "?";
}

namespace {

ComponentClass census_class(const WalshSpectrum& w) {
    const int64_t full = int64_t(1) << w.n;
    const int64_t w0 = w.values[0];
    if (w0 == full || w0 == -full) return ComponentClass::Constant;
    if (w.max_abs() == full) return ComponentClass::Affine;
    switch (classify(w).cls) {
        case SpectrumClass::Bent: return ComponentClass::Bent;
        case SpectrumClass::SemiBent: return ComponentClass::SemiBent;
        case SpectrumClass::Plateaued: return ComponentClass::Plateaued;
        case SpectrumClass::Other: return ComponentClass::Other;
    }
    return ComponentClass::Other;
}

}  // namespace

int64_t CensusReport::max_abs_walsh() const {
    int64_t m = 0;
    for (const ComponentInfo& c : per_component) m = std::max(m, c.max_abs_w);
    return m;
}

int64_t CensusReport::min_component_nonlinearity() const {
    return (int64_t(1) << (n - 1)) - max_abs_walsh() / 2;
}

CensusReport census(const VectorialFunc& F) {
    CensusReport r;
    r.n = F.n;
    r.uniformity = differential_uniformity(F);
    r.pure_quadratic = true;
    r.per_component.reserve(F.size() - 1);

    // attained-value bitmap over [-2^n, 2^n], inclusive on both ends
    std::vector<uint8_t> attained((size_t(2) << F.n) + 1, 0);
    const int64_t offset = int64_t(1) << F.n;

    for (uint32_t lam = 1; lam < F.size(); ++lam) {
        const BoolFunc f(F.n, component_table(F, lam));
        const WalshSpectrum w = walsh(f);
        for (int64_t v : w.values) attained[size_t(v + offset)] = 1;

        ComponentInfo info;
        info.lambda = lam;
        info.dim_v = linear_space_dim(f);
        info.cls = census_class(w);
        info.max_abs_w = w.max_abs();
        r.sum_linear += (uint64_t(1) << info.dim_v) - 1;
        if (info.cls == ComponentClass::Bent) ++r.bent_count;
        if (degree(f) != 2) r.pure_quadratic = false;
        r.per_component.push_back(info);
    }
    r.nonbent_count = int64_t(F.size()) - 1 - r.bent_count;
    for (size_t i = 0; i < attained.size(); ++i)
        if (attained[i]) r.spectrum.push_back(int64_t(i) - offset);

    if (F.n % 2 == 0) {
        const int64_t base = 2 * (int64_t(F.size()) - 1) / 3;
        const int64_t diff = r.bent_count - base;
        if (diff >= 0 && diff % 4 == 0) r.t = diff / 4;
    }
    return r;
}

NonlinearityCheck apn_nonlinearity_check(const VectorialFunc& Q) {
    if (Q.n % 2 != 0)
        throw std::domain_error("apn_nonlinearity_check: requires even dimension");
    if (auto lam = non_quadratic_component(Q))
        throw std::domain_error("apn_nonlinearity_check: component " + std::to_string(*lam) +
                                " is not quadratic");
    if (!is_apn(Q))
        throw std::domain_error("apn_nonlinearity_check: input is not APN");

    const CensusReport r = census(Q);
    NonlinearityCheck c;
    // APN + pure quadratic + even n makes t well-defined
    c.t = r.t.value();
    c.measured = r.min_component_nonlinearity();
    const int64_t half = int64_t(1) << (Q.n / 2);
    if (c.t == 0) {
        c.predicted = (int64_t(1) << (Q.n - 1)) - half;
        c.in_range = true;
    } else if (c.t >= 1 && c.t <= 4) {
        c.predicted = (int64_t(1) << (Q.n - 1)) - 2 * half;
        c.in_range = true;
    }
    c.matches = c.predicted && *c.predicted == c.measured;
    return c;
}

TrivialComponentScan trivial_component_exists(const VectorialFunc& F) {
    TrivialComponentScan r;
    for (uint32_t lam = 1; lam < F.size(); ++lam) {
        const BoolFunc f(F.n, component_table(F, lam));
        if (linear_space_dim(f) == 0) {
            if (!r.found) r.witness = lam;
            r.found = true;
            ++r.count;
        }
    }
    return r;
}

PermutationDiagnostics apn_permutation_diagnostics(const VectorialFunc& F) {
    PermutationDiagnostics d;
    if (F.n % 2 != 0) d.unmet = "n odd";
    else if (!is_permutation(F)) d.unmet = "not a permutation";
    else if (!is_apn(F)) d.unmet = "not APN";
    d.hypotheses_met = d.unmet.empty();

    for (uint32_t lam = 1; lam < F.size(); ++lam) {
        const BoolFunc f(F.n, component_table(F, lam));
        const LinearSpace v = linear_space(f);
        if (v.dim > d.max_dim) {
            d.max_dim = v.dim;
            d.max_dim_lambda = lam;
        }
        if (v.dim > 1) d.all_dims_at_most_one = false;
        for (const auto& [a, c] : v.constants)
            if (a != 0 && c == 0) {
                d.constant_derivatives_all_one = false;
                d.zero_derivative_witnesses.emplace_back(lam, a);
            }
    }
    return d;
}

// --- power functions ----------------------------------------------------------------

bool PowerAnalysis::ok() const {
    if (image_size_measured != image_size_predicted) return false;
    if (is_permutation_measured != is_permutation_predicted) return false;
    if (is_apn_predicted && *is_apn_predicted != is_apn_measured) return false;
    if (census_checked &&
        (bent_measured != bent_predicted || !bent_set_matches || !spectrum_matches))
        return false;
    return true;
}

PowerAnalysis power_analyze(int n, int k, const FieldSpec& field) {
    if (field.n() != n)
        throw std::domain_error("power_analyze: field degree does not match n");
    if (k < 1) throw std::domain_error("power_analyze: k must be >= 1");

    PowerAnalysis pa;
    pa.n = n;
    pa.k = k;
    pa.d = (uint64_t(1) << k) + 1;
    const GcdPow2 g = gcd_pow2(n, k);
    pa.m = g.m;
    pa.s = g.s;
    pa.e = g.e;

    // x^(2^k) is the Frobenius iterate, so only k mod n matters pointwise
    const uint32_t exponent = (uint32_t(1) << (k % n)) + 1;
    const UnivariatePoly p(field, {PolyTerm{1, exponent}});
    const VectorialFunc F = compile(p);

    pa.image_size_predicted = 1 + (F.size() - 1) / pa.e;
    pa.is_permutation_predicted = pa.e == 1;
    const std::vector<uint32_t> im = image(F);
    pa.image_size_measured = im.size();
    pa.is_permutation_measured = pa.image_size_measured == F.size();
    pa.is_apn_measured = is_apn(F);

    if (n % 2 != 0) return pa;  // bent census only applies in even dimension

    pa.is_apn_predicted = pa.e == 3 && pa.s == 2;
    pa.census_checked = true;
    pa.bent_predicted = int64_t((pa.e - 1) * uint64_t(F.size() - 1) / pa.e);

    const CensusReport r = census(F);
    pa.bent_measured = r.bent_count;
    pa.spectrum_measured = r.spectrum;

    const int64_t amp = int64_t(1) << ((n + pa.s) / 2);
    std::set<int64_t> predicted{0, amp, -amp};
    if (pa.e != 1) {
        const int64_t half = int64_t(1) << (n / 2);
        predicted.insert(half);
        predicted.insert(-half);
    }
    pa.spectrum_predicted.assign(predicted.begin(), predicted.end());

    // the statement pins the attainable magnitudes; signs need not all occur
    std::set<int64_t> measured_abs, predicted_abs;
    for (int64_t v : pa.spectrum_measured) measured_abs.insert(v < 0 ? -v : v);
    for (int64_t v : pa.spectrum_predicted) predicted_abs.insert(v < 0 ? -v : v);
    pa.spectrum_matches =
        measured_abs == predicted_abs &&
        std::all_of(pa.spectrum_measured.begin(), pa.spectrum_measured.end(),
                    [&](int64_t v) { return predicted.count(v) > 0; });

    std::vector<uint8_t> in_image(F.size(), 0);
    for (uint32_t y : im) in_image[y] = 1;
    pa.bent_set_matches = true;
    for (uint32_t alpha = 1; alpha < F.size(); ++alpha) {
        const uint32_t lam = trace_lambda(field, alpha);
        const bool bent = r.per_component[lam - 1].cls == ComponentClass::Bent;
        if (bent != !in_image[alpha]) {
            pa.bent_set_matches = false;
            break;
        }
    }
    return pa;
}

}  // namespace bfa
