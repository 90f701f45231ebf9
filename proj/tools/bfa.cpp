// bfa: analysis of Boolean and vectorial Boolean functions over F_2^n.

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bfa/boolfunc.hpp"
#include "bfa/constructions.hpp"
#include "bfa/gf2n.hpp"
#include "bfa/serialize.hpp"
#include "bfa/vbf.hpp"
#include "bfa/verify.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;

void print_caret_diagnostic(const std::string& input, const bfa::ParseError& e) {
    std::cerr << "error: " << e.what() << " at position " << e.position << "\n";
    std::cerr << "  " << input << "\n";
    std::cerr << "  " << std::string(std::min(e.position, input.size()), ' ') << "^\n";
}

int thread_budget() {
    if (const char* env = std::getenv("BFA_THREADS")) {
        const int v = std::atoi(env);
        if (v >= 1) return v;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? int(hw) : 1;
}

// the human-readable table is always rendered from the JSON document
void print_kv_table(const ordered_json& j, std::ostream& os) {
    size_t width = 0;
    for (const auto& [key, value] : j.items())
        if (!value.is_array() && !value.is_object()) width = std::max(width, key.size());
    for (const auto& [key, value] : j.items()) {
        if (value.is_array() || value.is_object()) continue;
        os << key << std::string(width - key.size() + 2, ' ');
        if (value.is_string()) os << value.get<std::string>();
        else if (value.is_null()) os << "-";
        else os << value.dump();
        os << "\n";
    }
}

std::string join_row(const std::vector<std::string>& cells, char sep) {
    std::string out;
    for (size_t i = 0; i < cells.size(); ++i) {
        if (i) out += sep;
        out += cells[i];
    }
    return out;
}

// --- analyze -----------------------------------------------------------------

struct AnalyzeOptions {
    std::string anf;
    std::string tt;
    int n = 0;
    bool show_spectrum = false;
    std::string format = "table";
};

int run_analyze(const AnalyzeOptions& opt) {
    bfa::BoolFunc f;
    try {
        if (!opt.anf.empty()) {
            f = bfa::truth_table(bfa::parse_anf(
                opt.anf, opt.n ? std::optional<int>(opt.n) : std::nullopt));
        } else {
            f = bfa::from_hex(opt.tt, opt.n ? std::optional<int>(opt.n) : std::nullopt);
        }
    } catch (const bfa::ParseError& e) {
        print_caret_diagnostic(opt.anf.empty() ? opt.tt : opt.anf, e);
        return kExitUsage;
    }

    const bfa::WalshSpectrum w = bfa::walsh(f);
    const bfa::Classification cls = bfa::classify(w);
    const bfa::Anf a = bfa::anf(f);

    ordered_json j;
    j["n"] = f.n();
    j["weight"] = bfa::weight(f);
    j["balanced"] = bfa::is_balanced(f);
    j["degree"] = bfa::degree(a);
    j["anf"] = bfa::to_anf_string(a);
    j["nonlinearity"] = bfa::nonlinearity(w);
    j["dimV"] = bfa::linear_space_dim(f);
    j["gamma"] = bfa::gamma_set(f).size();
    j["class"] = bfa::to_string(cls.cls);
    j["amplitude"] = cls.amplitude;
    if (opt.show_spectrum) j["spectrum"] = w.values;

    if (opt.format == "json") {
        std::cout << j.dump() << "\n";
    } else if (opt.format == "csv") {
        std::vector<std::string> header, row;
        for (const auto& [key, value] : j.items()) {
            if (value.is_array()) continue;
            header.push_back(key);
            row.push_back(value.is_string() ? value.get<std::string>() : value.dump());
        }
        std::cout << join_row(header, ',') << "\n" << join_row(row, ',') << "\n";
    } else {
        print_kv_table(j, std::cout);
        if (opt.show_spectrum) {
            std::cout << "spectrum";
            for (int64_t v : w.values) std::cout << " " << v;
            std::cout << "\n";
        }
    }
    return 0;
}

// --- census ------------------------------------------------------------------

struct CensusOptions {
    std::string poly;
    std::string catalog_name;
    std::string table;
    std::string field;
    std::string catalog_dir = "./catalog";
    int n = 0;
    int64_t expect_b = -1;
    bool expect_b_set = false;
    std::string format = "table";
};

bfa::VectorialFunc census_input(const CensusOptions& opt) {
    if (!opt.catalog_name.empty()) {
        const std::filesystem::path file =
            std::filesystem::path(opt.catalog_dir) / (opt.catalog_name + ".txt");
        std::optional<bfa::LoadedPoly> loaded;
        if (std::filesystem::exists(file))
            loaded = bfa::load_poly_file(file.string());
        if (loaded) {
            if (!opt.field.empty() && !(bfa::FieldSpec::parse(opt.field) == loaded->field))
                throw std::invalid_argument(
                    "census: --field disagrees with the field pinned by the catalog entry");
            return bfa::compile(loaded->poly);
        }
        const bfa::UnivariatePoly p = bfa::catalog_poly(opt.catalog_name);
        if (!opt.field.empty() && !(bfa::FieldSpec::parse(opt.field) == p.field()))
            throw std::invalid_argument(
                "census: --field disagrees with the field pinned by the catalog entry");
        return bfa::compile(p);
    }
    if (!opt.poly.empty()) {
        // --field defaults to the Conway presentation of the given --n
        if (opt.field.empty() && opt.n == 0)
            throw std::invalid_argument(
                "census: --poly needs --field (e.g. n=6,mod=conway) or --n");
        const bfa::FieldSpec field = opt.field.empty()
                                         ? bfa::FieldSpec::conway(opt.n)
                                         : bfa::FieldSpec::parse(opt.field);
        return bfa::compile(bfa::UnivariatePoly::parse(field, opt.poly));
    }
    // --table: comma/space-separated output words
    std::vector<uint32_t> outputs;
    std::string token;
    std::istringstream in(opt.table);
    while (std::getline(in, token, ',')) {
        std::istringstream ws(token);
        std::string word;
        while (ws >> word) outputs.push_back(uint32_t(std::stoul(word, nullptr, 0)));
    }
    int n = opt.n;
    if (n == 0) {
        while ((size_t(1) << n) < outputs.size()) ++n;
    }
    return bfa::vectorial_from_outputs(n, std::move(outputs));
}

int run_census(const CensusOptions& opt) {
    bfa::VectorialFunc F;
    try {
        F = census_input(opt);
    } catch (const bfa::ParseError& e) {
        print_caret_diagnostic(!opt.poly.empty() ? opt.poly : opt.field, e);
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    const bfa::CensusReport r = bfa::census(F);
    const ordered_json j = bfa::census_to_json(r);

    if (opt.format == "json") {
        std::cout << j.dump() << "\n";
    } else if (opt.format == "csv") {
        std::cout << bfa::census_to_csv(r);
    } else {
        print_kv_table(j, std::cout);
        std::cout << "spectrum ";
        for (size_t i = 0; i < r.spectrum.size(); ++i)
            std::cout << (i ? " " : "") << r.spectrum[i];
        std::cout << "\n\nlambda  dimV  class       maxAbsW\n";
        for (const bfa::ComponentInfo& c : r.per_component) {
            std::ostringstream row;
            row.width(6);
            row << std::left << c.lambda << "  ";
            row.width(4);
            row << c.dim_v << "  ";
            row.width(10);
            row << bfa::to_string(c.cls) << "  " << c.max_abs_w;
            std::cout << row.str() << "\n";
        }
    }

    if (opt.expect_b_set && r.bent_count != opt.expect_b) {
        std::cerr << "bent-count mismatch: expected " << opt.expect_b << ", measured "
                  << r.bent_count << "\n";
        return kExitVerificationFailure;
    }
    return 0;
}

// --- power scan ---------------------------------------------------------------

int run_power_scan(int n_max, const std::string& format) {
    std::vector<std::pair<int, int>> rows;
    for (int n = 4; n <= n_max; n += 2)
        for (int k = 1; k < n; ++k) rows.emplace_back(n, k);

    std::vector<bfa::PowerAnalysis> results(rows.size());
    std::atomic<size_t> next{0};
    const int workers = std::min<int>(thread_budget(), int(rows.size()));
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (size_t i = next.fetch_add(1); i < rows.size(); i = next.fetch_add(1)) {
                const auto [n, k] = rows[i];
                results[i] = bfa::power_analyze(n, k, bfa::FieldSpec::conway(n));
            }
        });
    for (std::thread& t : pool) t.join();

    bool all_ok = true;
    ordered_json out = ordered_json::array();
    for (const bfa::PowerAnalysis& pa : results) {
        all_ok = all_ok && pa.ok();
        ordered_json j;
        j["n"] = pa.n;
        j["k"] = pa.k;
        j["e"] = pa.e;
        j["s"] = pa.s;
        j["B_predicted"] = pa.bent_predicted;
        j["B_measured"] = pa.bent_measured;
        j["apn"] = pa.is_apn_measured;
        j["permutation"] = pa.is_permutation_measured;
        j["ok"] = pa.ok();
        out.push_back(std::move(j));
    }

    if (format == "json") {
        std::cout << out.dump() << "\n";
    } else {
        const char sep = format == "csv" ? ',' : ' ';
        std::cout << join_row({"n", "k", "e", "s", "B_predicted", "B_measured", "apn",
                               "permutation", "ok"},
                              sep)
                  << "\n";
        for (const auto& j : out) {
            std::vector<std::string> cells;
            for (const auto& [key, value] : j.items())
                cells.push_back(value.dump());
            std::cout << join_row(cells, sep) << "\n";
        }
    }
    return all_ok ? 0 : kExitVerificationFailure;
}

// --- verify ---------------------------------------------------------------------

int run_verify(const std::string& suite, uint64_t seed, int n_max, const std::string& format) {
    std::vector<bfa::verify::SuiteResult> results;
    if (suite == "core") results.push_back(bfa::verify::run_core(seed));
    else if (suite == "constructions") results.push_back(bfa::verify::run_constructions(seed));
    else if (suite == "apn") results.push_back(bfa::verify::run_apn(seed));
    else if (suite == "power") results.push_back(bfa::verify::run_power(seed, n_max));
    else if (suite == "all") results = bfa::verify::run_all(seed);
    else {
        std::cerr << "error: unknown suite '" << suite
                  << "' (known: core, constructions, apn, power, all)\n";
        return kExitUsage;
    }

    bool ok = true;
    ordered_json out = ordered_json::array();
    for (const bfa::verify::SuiteResult& r : results) {
        ok = ok && r.ok();
        ordered_json j;
        j["suite"] = r.suite;
        j["seed"] = r.seed;
        ordered_json checks = ordered_json::array();
        for (const bfa::verify::CheckResult& c : r.checks) {
            ordered_json jc;
            jc["name"] = c.name;
            jc["pass"] = c.pass;
            jc["fail"] = c.fail;
            checks.push_back(std::move(jc));
        }
        j["checks"] = std::move(checks);
        j["ok"] = r.ok();
        out.push_back(std::move(j));
    }

    if (format == "json") {
        std::cout << out.dump() << "\n";
    } else {
        for (const auto& j : out) {
            std::cout << "suite " << j["suite"].get<std::string>() << " (seed "
                      << j["seed"].dump() << ")\n";
            for (const auto& jc : j["checks"])
                std::cout << "  " << (jc["fail"].get<uint64_t>() ? "FAIL" : "ok  ") << "  "
                          << jc["pass"].dump() << "/"
                          << (jc["pass"].get<uint64_t>() + jc["fail"].get<uint64_t>()) << "  "
                          << jc["name"].get<std::string>() << "\n";
            std::cout << "  result " << (j["ok"].get<bool>() ? "PASS" : "FAIL") << "\n";
        }
    }
    return ok ? 0 : kExitVerificationFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"bfa: exact analysis of Boolean and vectorial Boolean functions over F_2^n"};
    app.require_subcommand(1);

    AnalyzeOptions an;
    CLI::App* analyze = app.add_subcommand("analyze", "analyze a single Boolean function");
    auto* anf_opt = analyze->add_option("--anf", an.anf, "algebraic normal form, e.g. \"x1*x2 + x3\"");
    auto* tt_opt = analyze->add_option("--tt", an.tt, "hex truth table, e.g. 0x6996");
    analyze->add_option("--n", an.n, "variable count (inferred when omitted)");
    analyze->add_flag("--spectrum", an.show_spectrum, "print the full Walsh spectrum");
    analyze->add_option("--format", an.format, "table | json | csv")
        ->check(CLI::IsMember({"table", "json", "csv"}));
    anf_opt->excludes(tt_opt);

    CensusOptions ce;
    CLI::App* census = app.add_subcommand("census", "per-component census of a vectorial function");
    auto* poly_opt = census->add_option("--poly", ce.poly, "univariate polynomial, e.g. \"x^3\"");
    auto* cat_opt = census->add_option("--catalog", ce.catalog_name, "named catalog entry");
    auto* tab_opt = census->add_option("--table", ce.table, "comma-separated output words");
    census->add_option("--field", ce.field, "field spec, e.g. n=6,mod=conway");
    census->add_option("--catalog-dir", ce.catalog_dir, "catalog directory (default ./catalog)");
    census->add_option("--n", ce.n, "dimension for --table input or the Conway default field");
    census->add_option("--expect-B", ce.expect_b, "fail (exit 1) unless the bent count matches")
        ->each([&](const std::string&) { ce.expect_b_set = true; });
    census->add_option("--format", ce.format, "table | json | csv")
        ->check(CLI::IsMember({"table", "json", "csv"}));
    poly_opt->excludes(cat_opt, tab_opt);
    cat_opt->excludes(tab_opt);

    int n_max = 8;
    std::string ps_format = "table";
    CLI::App* power = app.add_subcommand("power-scan",
                                         "predictions vs measurements for x^(2^k+1), even n");
    power->alias("power_scan");
    power->add_option("--n-max", n_max, "largest (even) dimension, at most 12");
    power->add_option("--format", ps_format, "table | json | csv")
        ->check(CLI::IsMember({"table", "json", "csv"}));

    std::string suite = "all";
    uint64_t seed = 1;
    int verify_n_max = 8;
    std::string vf_format = "table";
    CLI::App* verify = app.add_subcommand("verify", "run the self-verification suites");
    verify->add_option("--suite", suite, "core | constructions | apn | power | all");
    verify->add_option("--seed", seed, "seed for the randomized checks");
    verify->add_option("--n-max", verify_n_max, "power-suite dimension bound (even, <= 12)");
    verify->add_option("--format", vf_format, "table | json")
        ->check(CLI::IsMember({"table", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (analyze->parsed()) {
            if (an.anf.empty() == an.tt.empty()) {
                std::cerr << "error: analyze needs exactly one of --anf or --tt\n";
                return kExitUsage;
            }
            return run_analyze(an);
        }
        if (census->parsed()) {
            const int sources = int(!ce.poly.empty()) + int(!ce.catalog_name.empty()) +
                                int(!ce.table.empty());
            if (sources != 1) {
                std::cerr << "error: census needs exactly one of --poly, --catalog, --table\n";
                return kExitUsage;
            }
            return run_census(ce);
        }
        if (power->parsed()) {
            if (n_max < 4 || n_max > 12 || n_max % 2 != 0) {
                std::cerr << "error: --n-max must be an even number in [4, 12]\n";
                return kExitUsage;
            }
            return run_power_scan(n_max, ps_format);
        }
        if (verify->parsed()) {
            if (verify_n_max < 4 || verify_n_max > 12 || verify_n_max % 2 != 0) {
                std::cerr << "error: --n-max must be an even number in [4, 12]\n";
                return kExitUsage;
            }
            return run_verify(suite, seed, verify_n_max, vf_format);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return 0;
}
