#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

namespace {

namespace fs = std::filesystem;

struct RunResult {
    int code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(SPSLAB_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    int status = pclose(pipe);
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, out};
}

std::string golden(const std::string& name) {
    return std::string(SPSLAB_DATA_DIR) + "/golden/" + name;
}

std::string write_temp(const std::string& name, const std::string& content) {
    fs::path p = fs::temp_directory_path() / name;
    std::ofstream(p) << content;
    return p.string();
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("validate: exit codes for valid, invalid, and misused input") {
    CHECK(run_cli("validate " + golden("e2.cls")).code == 0);
    CHECK(run_cli("validate " + golden("g_e2.sps")).code == 0);

    std::string broken = write_temp("spslab_broken.cls", R"({"version":1,
        "kind":"closure-space","points":["x1","x2"],"closed_sets":[[]]})");
    CHECK(run_cli("validate " + broken).code == 1);

    std::string garbage = write_temp("spslab_garbage.cls", "not json at all");
    CHECK(run_cli("validate " + garbage).code == 1);

    CHECK(run_cli("validate /nonexistent/file.cls").code == 1);
    CHECK(run_cli("validate").code == 2);
    CHECK(run_cli("no-such-subcommand").code == 2);
    CHECK(run_cli("--help").code == 0);
}

TEST_CASE("components lists the blocks of E2") {
    RunResult r = run_cli("components " + golden("e2.cls"));
    CHECK(r.code == 0);
    CHECK(r.out.find("{x1}") != std::string::npos);
    CHECK(r.out.find("{x2,x3}") != std::string::npos);
    CHECK(r.out.find("total: 2") != std::string::npos);

    auto j = nlohmann::json::parse(run_cli("--format structured components " + golden("e2.cls")).out);
    CHECK(j["count"] == 2);
    CHECK(j["blocks"].size() == 2);
}

TEST_CASE("boolean and table commands") {
    CHECK(run_cli("is-topological " + golden("e1.cls")).out == "true\n");
    CHECK(run_cli("is-topological " + golden("e3.cls")).out == "false\n");
    CHECK(run_cli("is-connected " + golden("e3.cls")).out == "true\n");
    CHECK(run_cli("is-connected " + golden("e2.cls")).out == "false\n");
    CHECK(run_cli("clopens " + golden("e2.cls")).out.find("total: 4") != std::string::npos);

    RunResult ssr = run_cli("ssr-table " + golden("g_e2.sps"));
    CHECK(ssr.code == 0);
    RunResult cls = run_cli("classical-props " + golden("g_e2.sps"));
    CHECK(cls.code == 0);
    CHECK(cls.out.find("classical system: yes") != std::string::npos);
}

TEST_CASE("conversions round-trip through the functors") {
    RunResult sps = run_cli("to-sps " + golden("e3.cls"));
    CHECK(sps.code == 0);
    std::string sps_file = write_temp("spslab_ge3.sps", sps.out);
    RunResult back = run_cli("to-closure " + sps_file);
    CHECK(back.code == 0);
    CHECK(back.out == slurp(golden("e3.cls")));
}

TEST_CASE("decompose reports components and evidence") {
    RunResult r = run_cli("decompose " + golden("e3.cls"));
    CHECK(r.code == 0);
    CHECK(r.out.find("component 1") != std::string::npos);
    CHECK(r.out.find("pure nonclassical") != std::string::npos);
    CHECK(r.out.find("component 2") == std::string::npos);  // E3 is connected

    RunResult r2 = run_cli("decompose " + golden("e2.cls"));
    CHECK(r2.code == 0);
    CHECK(r2.out.find("component 2") != std::string::npos);

    // the eta counterexample space exits 1 and says why
    RunResult bad = run_cli("decompose " + golden("eta_counterexample.cls"));
    CHECK(bad.code == 1);
    CHECK(bad.out.find("COUNTEREXAMPLE") != std::string::npos);
}

TEST_CASE("segment and totally-classical emit valid documents") {
    RunResult seg = run_cli("segment " + golden("g_e2.sps") + " --property {x1}");
    CHECK(seg.code == 0);
    std::string seg_file = write_temp("spslab_seg.sps", seg.out);
    CHECK(run_cli("validate " + seg_file).code == 0);

    // property names with commas survive shell quoting
    RunResult seg2 = run_cli("segment " + golden("g_e2.sps") + " --property '{x2,x3}'");
    CHECK(seg2.code == 0);
    auto doc = nlohmann::json::parse(seg2.out);
    CHECK(doc["states"] == nlohmann::json::array({"x2", "x3"}));
    CHECK(run_cli("segment " + golden("g_e2.sps") + " --property nope").code == 1);

    RunResult tc = run_cli("totally-classical " + golden("e2.cls"));
    CHECK(tc.code == 0);
    std::string tc_file = write_temp("spslab_tc.sps", tc.out);
    CHECK(run_cli("validate " + tc_file).code == 0);

    CHECK(run_cli("totally-classical " + golden("eta_counterexample.cls")).code == 1);
    CHECK(run_cli("classical-part " + golden("e5.cls")).code == 0);
}

TEST_CASE("enumerate and random are deterministic") {
    RunResult e3 = run_cli("--format structured enumerate --n 3");
    REQUIRE(e3.code == 0);
    auto j = nlohmann::json::parse(e3.out);
    CHECK(j["count"] == 45);
    CHECK(j["spaces"].size() == 45);

    RunResult bad = run_cli("enumerate --n 9");
    CHECK(bad.code == 1);

    RunResult r1 = run_cli("random --n 6 --density 0.3 --seed 42");
    RunResult r2 = run_cli("random --n 6 --density 0.3 --seed 42");
    REQUIRE(r1.code == 0);
    CHECK(r1.out == r2.out);
    CHECK(r1.out == slurp(golden("random_n6_d0.3_s42.cls")));
}

TEST_CASE("check-theorems passes on fixtures and fails on the counterexample") {
    RunResult ok = run_cli("check-theorems " + golden("e2.cls"));
    CHECK(ok.code == 0);
    CHECK(ok.out.find("all checks passed") != std::string::npos);

    RunResult bad = run_cli("check-theorems " + golden("eta_counterexample.cls"));
    CHECK(bad.code == 1);
    CHECK(bad.out.find("[FAIL]") != std::string::npos);

    auto j = nlohmann::json::parse(
        run_cli("--format structured check-theorems " + golden("e1.cls")).out);
    CHECK(j["all_passed"] == true);
}

TEST_CASE("golden files parse-serialize to themselves") {
    for (const auto& entry : fs::directory_iterator(std::string(SPSLAB_DATA_DIR) + "/golden")) {
        if (entry.path().extension() != ".cls" && entry.path().extension() != ".sps") continue;
        if (entry.path().filename().string().starts_with("invalid_")) continue;
        std::string text = slurp(entry.path().string());
        RunResult echo = entry.path().extension() == ".cls"
                             ? run_cli("to-closure " + entry.path().string())
                             : run_cli("to-sps " + entry.path().string());
        // to-closure on a .cls goes through G then F, which must be exact
        CHECK(echo.code == 0);
        CHECK(echo.out == text);
    }
}
