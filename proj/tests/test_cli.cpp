#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

namespace {

struct RunResult {
    int exit_code;
    std::string output;  // stdout+stderr
};

RunResult run(const std::string& args, const std::string& env_prefix = "") {
    const std::string cmd = env_prefix + std::string(BFA_CLI_PATH) + " " + args + " 2>&1";
    std::array<char, 4096> buf{};
    RunResult r{-1, {}};
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.output.append(buf.data(), got);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

}  // namespace

TEST_CASE("analyze a bent function by ANF") {
    const RunResult r = run("analyze --anf \"x1*x2 + x3*x4\" --format json");
    CHECK(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.output);
    CHECK(j["n"] == 4);
    CHECK(j["class"] == "bent");
    CHECK(j["nonlinearity"] == 6);
    CHECK(j["weight"] == 6);
}

TEST_CASE("analyze a hex truth table") {
    const RunResult r = run("analyze --tt 0x6996 --n 4 --format json");
    CHECK(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.output);
    CHECK(j["balanced"] == true);
    CHECK(j["nonlinearity"] == 0);
    CHECK(j["degree"] == 1);

    const RunResult s = run("analyze --tt 0x6996 --spectrum --format json");
    CHECK(s.exit_code == 0);
    const auto js = nlohmann::json::parse(s.output);
    REQUIRE(js.contains("spectrum"));
    CHECK(js["spectrum"].size() == 16);
}

TEST_CASE("malformed ANF exits 2 with a caret diagnostic") {
    const RunResult r = run("analyze --anf \"x1*x2 $ x3\"");
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("^") != std::string::npos);
    CHECK(r.output.find("position") != std::string::npos);
}

TEST_CASE("analyze needs exactly one input source") {
    CHECK(run("analyze").exit_code == 2);
    CHECK(run("analyze --anf x1 --tt 0x6996").exit_code == 2);
}

TEST_CASE("census with expected bent counts") {
    CHECK(run("census --poly \"x^3\" --field n=6,mod=conway --expect-B 42").exit_code == 0);
    CHECK(run("census --poly \"x^3\" --field n=6,mod=conway --expect-B 41").exit_code == 1);
    // --field defaults to the Conway presentation for the given --n
    CHECK(run("census --poly \"x^3\" --n 6 --expect-B 42").exit_code == 0);
    CHECK(run("census --poly \"x^3\"").exit_code == 2);

    const std::string dir = std::string(" --catalog-dir ") + BFA_CATALOG_DIR;
    CHECK(run("census --catalog dillon_F --expect-B 46" + dir).exit_code == 0);
    CHECK(run("census --catalog G --expect-B 46" + dir).exit_code == 0);
    CHECK(run("census --catalog Gdoubleprime --expect-B 178" + dir).exit_code == 0);
    // built-in fallback when the directory has no such file
    CHECK(run("census --catalog dillon_F --catalog-dir /nonexistent --expect-B 46")
              .exit_code == 0);
    CHECK(run("census --catalog unknown_entry" + dir).exit_code == 2);
    // pinned field must not be contradicted
    CHECK(run("census --catalog dillon_F --field n=8,mod=conway" + dir).exit_code == 2);
}

TEST_CASE("census of an explicit output table") {
    const RunResult r =
        run("census --table \"0,1,2,3,4,5,6,7,8,9,10,11,12,13,14,15\" --format json");
    CHECK(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.output);
    CHECK(j["n"] == 4);
    CHECK(j["B"] == 0);
    CHECK(j["uniformity"] == 16);
    CHECK(j["t"].is_null());
}

TEST_CASE("census JSON output is byte-stable") {
    const std::string cmd = "census --poly \"x^3\" --field n=4,mod=conway --format json";
    const RunResult a = run(cmd);
    const RunResult b = run(cmd);
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
    const auto j = nlohmann::json::parse(a.output);
    CHECK(j["B"] == 10);
    CHECK(j["spectrum"] == nlohmann::json::parse("[-8,-4,0,4,8]"));
}

TEST_CASE("power scan output is independent of the thread budget") {
    const RunResult serial = run("power-scan --n-max 6", "BFA_THREADS=1 ");
    const RunResult parallel = run("power-scan --n-max 6", "BFA_THREADS=4 ");
    CHECK(serial.exit_code == 0);
    CHECK(serial.output == parallel.output);
}

TEST_CASE("power scan") {
    const RunResult r = run("power-scan --n-max 6 --format json");
    CHECK(r.exit_code == 0);
    const auto rows = nlohmann::json::parse(r.output);
    REQUIRE(rows.size() == 3 + 5);
    bool found41 = false, found62 = false;
    for (const auto& row : rows) {
        CHECK(row["ok"] == true);
        if (row["n"] == 4 && row["k"] == 1) {
            found41 = true;
            CHECK(row["e"] == 3);
            CHECK(row["B_measured"] == 10);
            CHECK(row["apn"] == true);
        }
        if (row["n"] == 6 && row["k"] == 2) {
            found62 = true;
            CHECK(row["e"] == 1);
            CHECK(row["B_measured"] == 0);
            CHECK(row["permutation"] == true);
        }
    }
    CHECK(found41);
    CHECK(found62);

    CHECK(run("power-scan --n-max 14").exit_code == 2);
    CHECK(run("power-scan --n-max 7").exit_code == 2);
}

TEST_CASE("verify suites") {
    CHECK(run("verify --suite power --seed 1 --n-max 6").exit_code == 0);
    CHECK(run("verify --suite apn --seed 1").exit_code == 0);
    CHECK(run("verify --suite nonsense").exit_code == 2);

    // deterministic for a fixed seed
    const RunResult a = run("verify --suite constructions --seed 7 --format json");
    const RunResult b = run("verify --suite constructions --seed 7 --format json");
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
}

TEST_CASE("unknown subcommand exits 2") {
    CHECK(run("frobnicate").exit_code == 2);
}
