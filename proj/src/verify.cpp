#include "bfa/verify.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace bfa::verify {

namespace {

// tallies one named check across many trials
struct Tally {
    std::vector<CheckResult>& out;

    void operator()(const std::string& name, bool pass) {
        for (CheckResult& c : out)
            if (c.name == name) {
                ++(pass ? c.pass : c.fail);
                return;
            }
        out.push_back({name, pass ? uint64_t(1) : 0, pass ? 0 : uint64_t(1)});
    }
};

}  // namespace

// --- random generators ------------------------------------------------------

BoolFunc random_function(int n, std::mt19937_64& rng) {
    std::vector<uint8_t> t(size_t(1) << n);
    uint64_t bits = 0;
    for (size_t x = 0; x < t.size(); ++x) {
        if (x % 64 == 0) bits = rng();
        t[x] = uint8_t(bits >> (x % 64) & 1);
    }
    return BoolFunc(n, std::move(t));
}

BoolFunc random_quadratic(int n, std::mt19937_64& rng) {
    Anf a;
    a.n = n;
    std::set<uint32_t> monos;
    for (int i = 0; i < n; ++i) {
        if (rng() & 1) monos.insert(uint32_t(1) << i);
        for (int j = i + 1; j < n; ++j)
            if (rng() & 1) monos.insert((uint32_t(1) << i) | (uint32_t(1) << j));
    }
    if (rng() & 1) monos.insert(0);
    a.monomials.assign(monos.begin(), monos.end());
    return truth_table(a);
}

VectorialFunc random_vectorial(int n, std::mt19937_64& rng) {
    std::vector<uint32_t> out(size_t(1) << n);
    for (uint32_t& y : out) y = uint32_t(rng()) & ((uint32_t(1) << n) - 1);
    return VectorialFunc{n, std::move(out)};
}

Affinity random_affinity(int n, std::mt19937_64& rng) {
    Affinity phi;
    phi.n = n;
    phi.rows.resize(n);
    do {
        for (uint32_t& r : phi.rows) r = uint32_t(rng()) & ((uint32_t(1) << n) - 1);
    } while (!is_invertible(phi));
    phi.shift = uint32_t(rng()) & ((uint32_t(1) << n) - 1);
    return phi;
}

BoolFunc random_bent(int n, std::mt19937_64& rng) {
    BoolFunc f = bent_mm(n, random_affinity(n, rng));
    if (rng() & 1) f = f + 1;  // complement is bent too
    return f;
}

// --- suites ---------------------------------------------------------------------

bool SuiteResult::ok() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.fail == 0; });
}

SuiteResult run_core(uint64_t seed) {
    SuiteResult r{"core", seed, {}};
    Tally check{r.checks};
    std::mt19937_64 rng(seed);

    for (int n = 3; n <= 8; ++n) {
        const int64_t parseval = int64_t(1) << (2 * n);
        for (int trial = 0; trial < 200; ++trial) {
            const BoolFunc f = random_function(n, rng);
            const WalshSpectrum w = walsh(f);

            int64_t energy = 0;
            bool even_and_bounded = true;
            for (int64_t v : w.values) {
                energy += v * v;
                if (v % 2 != 0 || v > int64_t(1) << n || v < -(int64_t(1) << n))
                    even_and_bounded = false;
            }
            check("parseval energy 2^2n", energy == parseval);
            check("walsh values even and within +-2^n", even_and_bounded);

            check("weight from W(0)",
                  int64_t(weight(f)) == (int64_t(1) << (n - 1)) - w.values[0] / 2);
            check("moebius round trip", truth_table(anf(f)) == f);

            const LinearSpace v = linear_space(f);
            check("linear space contains 0", v.contains(0));
            bool closed = true;
            for (const auto& [a, ca] : v.constants)
                for (const auto& [b, cb] : v.constants)
                    if (!v.contains(a ^ b)) closed = false;
            check("linear space closed under xor", closed);
            check("dim matches element count",
                  (size_t(1) << v.dim) == v.constants.size());
        }

        for (int trial = 0; trial < 100; ++trial) {
            const BoolFunc q = random_quadratic(n, rng);
            if (degree(q) != 2) continue;
            const int k = linear_space_dim(q);
            check("quadratic dim parity matches n", (k - n) % 2 == 0);
            const WalshSpectrum w = walsh(q);
            check("quadratic amplitude 2^((n+k)/2)",
                  w.max_abs() == int64_t(1) << ((n + k) / 2));
            check("quadratic nonlinearity law",
                  nonlinearity(w) == (int64_t(1) << (n - 1)) - (int64_t(1) << ((n + k) / 2 - 1)));
        }
    }

    // bent <=> all nonzero derivatives balanced <=> full gamma set
    for (int n : {4, 6}) {
        for (int trial = 0; trial < 40; ++trial) {
            const BoolFunc f =
                trial % 2 == 0 ? random_bent(n, rng) : random_function(n, rng);
            const bool bent = classify(f).cls == SpectrumClass::Bent;
            const bool gamma_full = gamma_set(f).size() == f.size() - 1;
            check("bent iff gamma covers all nonzero shifts", bent == gamma_full);
            check("sigma_one iff dim V >= 1", sigma_one(f) == (linear_space_dim(f) >= 1));
            if (linear_space_dim(f) >= 1)
                check("nontrivial linear space caps gamma at 2^n-4",
                      gamma_set(f).size() <= f.size() - 4);
        }
    }
    return r;
}

SuiteResult run_constructions(uint64_t seed) {
    SuiteResult r{"constructions", seed, {}};
    Tally check{r.checks};
    std::mt19937_64 rng(seed);

    for (int trial = 0; trial < 400; ++trial) {
        const int n = 3 + int(rng() % 6);  // 3..8
        const BoolFunc g = random_function(n, rng);
        const BoolFunc h = random_function(n, rng);

        const SplitSum ss = split_sum(g, h);
        check("split weight identity",
              weight(ss.f) == weight(g + h) + weight(h));
        check("split balanced when g+h and h balanced",
              !(is_balanced(g + h) && is_balanced(h)) || is_balanced(ss.f));
        check("split unbalanced when exactly one of g+h, h balanced",
              !(is_balanced(g + h) != is_balanced(h)) || !is_balanced(ss.f));

        const ConvProduct cp = conv_product(g, h);
        check("conv weight additivity", weight(cp.f) == weight(g) + weight(h));

        // derivative decomposition across every direction, small n
        if (n <= 5) {
            bool all_equal = true;
            for (uint32_t lam = 0; lam < uint32_t(2) << n; ++lam)
                if (!derivative_decomposition(ss, lam).equal) all_equal = false;
            check("split derivative decomposition exact", all_equal);
        }
    }

    for (int trial = 0; trial < 200; ++trial) {
        const int n = 4 + int(rng() % 4);  // 4..7, result on n+1 <= 8
        const BoolFunc g_tilde = random_function(n - 1, rng);
        const BoolFunc h_tilde = random_function(n - 2, rng);
        const SplitSum c1 = construction_1(g_tilde, h_tilde);
        check("construction_1 balanced", is_balanced(c1.f));
        if (n % 2 == 1 && (n - 1) >= 4) {
            const SplitSum bent_case = construction_1(random_bent(n - 1, rng), h_tilde);
            check("construction_1 with bent inner has trivial linear space",
                  linear_space_dim(bent_case.f) == 0);
        }
    }

    for (int trial = 0; trial < 200; ++trial) {
        const int n = 4 + int(rng() % 5);  // 4..8
        const int depth = 1 + int(rng() % (n / 2));
        std::vector<BoolFunc> inner;
        for (int i = 1; i <= depth; ++i) inner.push_back(random_function(n - 2 * i, rng));
        check("construction_2 balanced variant",
              is_balanced(construction_2(n, inner, Construction2Variant::Balanced)));
        check("construction_2 unbalanced variant",
              !is_balanced(construction_2(n, inner, Construction2Variant::Unbalanced,
                                          int(rng() & 1))));
    }

    for (int trial = 0; trial < 200; ++trial) {
        const int n = 4 + 2 * int(rng() % 2);  // 4 or 6
        const BoolFunc g = random_bent(n, rng);
        const BoolFunc h = random_bent(n, rng);
        const ConvProduct cp = conv_product(g, h);
        const Classification cls = classify(cp.f);
        check("bent-pair conv product plateaued at 2^(n/2+1)",
              (cls.cls == SpectrumClass::Plateaued || cls.cls == SpectrumClass::SemiBent ||
               cls.cls == SpectrumClass::Bent) &&
                  cls.amplitude == int64_t(1) << (n / 2 + 1));
        check("bent-pair conv balanced iff weights differ",
              is_balanced(cp.f) == (weight(g) != weight(h)));
        if (weight(g) == weight(h)) {
            const uint32_t w = weight(cp.f);
            const uint32_t full = uint32_t(1) << n;
            const uint32_t half = uint32_t(1) << (n / 2);
            check("bent-pair equal-weight conv weight 2^n +- 2^(n/2)",
                  w == full - half || w == full + half);
        }
    }

    // cubic conv classification on random quadratics
    for (int trial = 0; trial < 400; ++trial) {
        const int n = 4 + int(rng() % 3);
        const BoolFunc g = random_quadratic(n, rng);
        const BoolFunc h = random_quadratic(n, rng);
        try {
            const bool balanced = cubic_conv_balanced_test(g, h);
            check("cubic conv classification consistent",
                  balanced == is_balanced(conv_product(g, h).f));
        } catch (const std::domain_error&) {
            // the random pair missed the cubic hypothesis; nothing to check
        }
    }
    return r;
}

SuiteResult run_apn(uint64_t seed) {
    SuiteResult r{"apn", seed, {}};
    Tally check{r.checks};
    std::mt19937_64 rng(seed);

    // random 4-bit vectorial functions: the fourth-moment route must agree
    // with the definitional route everywhere, and the bound is universal
    for (int trial = 0; trial < 100; ++trial) {
        const VectorialFunc F = random_vectorial(4, rng);
        const ApnSumCheck sc = apn_sum_check(F);
        check("fourth-moment bound universal", sc.meets_bound);
        check("fourth-moment equality iff APN", sc.equality == is_apn(F));
    }

    // random pure quadratics: the linear-space sum route must agree too
    int quadratic_draws = 0;
    while (quadratic_draws < 60) {
        std::vector<uint32_t> out(16, 0);
        for (int bit = 0; bit < 4; ++bit) {
            const BoolFunc c = random_quadratic(4, rng);
            for (uint32_t x = 0; x < 16; ++x) out[x] |= uint32_t(c(x)) << bit;
        }
        const VectorialFunc Q{4, std::move(out)};
        if (non_quadratic_component(Q)) continue;
        ++quadratic_draws;
        const QuadraticSumCheck qc = quadratic_sum_check(Q);
        check("linear-space sum at least 2^n-1", qc.sum_linear >= 15);
        check("linear-space sum equality iff APN", qc.is_apn_equiv == is_apn(Q));
        if (is_apn(Q)) {
            const CensusReport c = census(Q);
            check("dimension-4 APN census has B = 10", c.bent_count == 10);
        }
    }

    const FieldSpec f6 = FieldSpec::conway(6);
    const struct {
        const char* name;
        int64_t expect_b;
    } entries[] = {
        {"dillon_F", 46}, {"G", 46}, {"Gprime", 174}, {"Gdoubleprime", 178}};
    for (const auto& e : entries) {
        const VectorialFunc F = catalog(e.name);
        check("catalog entry APN", is_apn(F));
        check("catalog entry pure quadratic", !non_quadratic_component(F).has_value());
        const CensusReport c = census(F);
        check("catalog bent count matches", c.bent_count == e.expect_b);
        const int64_t base = 2 * (int64_t(F.size()) - 1) / 3;
        check("bent count law: B - 2(2^n-1)/3 in 4Z>=0",
              c.t.has_value());
        check("bent count below 2^n - 2^(n/2) - 2",
              c.bent_count <= int64_t(F.size()) - (int64_t(1) << (F.n / 2)) - 2);
        check("bent count at least 2(2^n-1)/3", c.bent_count >= base);
        check("APN has a trivial-linear-space component",
              trivial_component_exists(F).found);
        check("quadratic sum equality on catalog APN",
              quadratic_sum_check(F).is_apn_equiv);
        check("fourth-moment equality on catalog APN", apn_sum_check(F).equality);
        const NonlinearityCheck nc = apn_nonlinearity_check(F);
        check("nonlinearity prediction matches measurement", nc.in_range && nc.matches);
    }

    const VectorialFunc g6 = gold(6, 1, f6);
    const CensusReport gc = census(g6);
    check("gold dimension-6 census B = 42", gc.bent_count == 42);
    check("gold dimension-6 spectrum {0,+-8,+-16}",
          gc.spectrum == std::vector<int64_t>({-16, -8, 0, 8, 16}));
    check("gold dimension-6 min nonlinearity 24", gc.min_component_nonlinearity() == 24);
    check("gold bent/non-bent split counts", gc.bent_count + gc.nonbent_count == 63);

    // odd dimension: every component of a quadratic APN keeps a nonzero
    // linear structure, and the linear-space sum still reaches equality
    const FieldSpec f5 = FieldSpec::conway(5);
    const VectorialFunc g5 = gold(5, 1, f5);
    check("odd-dimension gold APN", is_apn(g5));
    check("odd-dimension equality of linear-space sum",
          quadratic_sum_check(g5).is_apn_equiv);
    check("odd-dimension components all have nontrivial linear space",
          !trivial_component_exists(g5).found);
    return r;
}

SuiteResult run_power(uint64_t seed, int n_max) {
    SuiteResult r{"power", seed, {}};
    Tally check{r.checks};

    for (int n = 4; n <= n_max; n += 2) {
        const FieldSpec field = FieldSpec::conway(n);
        for (int k = 1; k < n; ++k) {
            const PowerAnalysis pa = power_analyze(n, k, field);
            check("image size 1 + (2^n-1)/e",
                  pa.image_size_measured == pa.image_size_predicted);
            check("permutation iff e = 1",
                  pa.is_permutation_measured == pa.is_permutation_predicted);
            check("bent count (e-1)(2^n-1)/e", pa.bent_measured == pa.bent_predicted);
            check("bent count below the global ceiling 2^n - 2^(n/2)",
                  pa.bent_measured <= (int64_t(1) << n) - (int64_t(1) << (n / 2)));
            check("bent components are exactly the non-image traces",
                  pa.bent_set_matches);
            check("spectrum magnitudes match the gcd prediction", pa.spectrum_matches);
            check("APN iff e = 3 and s = 2",
                  pa.is_apn_predicted && *pa.is_apn_predicted == pa.is_apn_measured);
        }
    }

    // odd dimension: e = 1 always, so every quadratic power map is a permutation
    for (int n : {3, 5, 7}) {
        const FieldSpec field = FieldSpec::conway(n);
        for (int k = 1; k < n; ++k) {
            const PowerAnalysis pa = power_analyze(n, k, field);
            check("odd-dimension power maps are permutations",
                  pa.e == 1 && pa.is_permutation_measured);
        }
    }
    return r;
}

std::vector<SuiteResult> run_all(uint64_t seed) {
    return {run_core(seed), run_constructions(seed), run_apn(seed), run_power(seed)};
}

}  // namespace bfa::verify
