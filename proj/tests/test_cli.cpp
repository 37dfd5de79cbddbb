#include <catch2/catch_amalgamated.hpp>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

using nlohmann::json;

#ifndef ROOTGEO_CLI_PATH
#error "ROOTGEO_CLI_PATH must point at the built binary"
#endif

namespace {

struct RunResult {
    int code;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(ROOTGEO_CLI_PATH) + " " + args + " 2>&1";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), got);
    int status = pclose(p);
    return RunResult{WIFEXITED(status) ? WEXITSTATUS(status) : -1, std::move(out)};
}

std::string write_temp(const std::string& name, const std::string& content) {
    std::string path = std::string("/tmp/rootgeo_cli_") + name;
    std::ofstream f(path);
    f << content;
    return path;
}

} // namespace

TEST_CASE("golden table commands pass with exit 0") {
    CHECK(run("roots -a 1 -b 1 -c -1/2 -n 8 --golden table1").code == 0);
    CHECK(run("roots -a 1 -b 1 -c 1 -n 8 --golden table2").code == 0);
}

TEST_CASE("golden mismatch exits 3") {
    RunResult r = run("roots -a 1 -b 1 -c 1 -n 8 --golden table1");
    CHECK(r.code == 3);
    CHECK(r.out.find("mismatch") != std::string::npos);
}

TEST_CASE("invalid input exits 2") {
    CHECK(run("roots -a 0 -b 1 -c 1 -n 4").code == 2);
    CHECK(run("roots -a 1 -b 1 -c 0.5 -n 4").code == 2); // decimals are rejected
    CHECK(run("roots -a 1 -b 1 -c 1 -n 4 --precision 1e-6").code == 2);
    CHECK(run("analyze -a 1 -b 1").code == 2);       // missing -c
    CHECK(run("nonsense -a 1 -b 1 -c 1").code == 2); // unknown command
    // r = -c/b degenerates W_1 against B
    CHECK(run("analyze -a 1 -b 1 -c -1/2 -r 1/2").code == 2);
}

TEST_CASE("single-row table for n = 1") {
    RunResult r = run("roots -a 1 -b 1 -c -1/2 -n 1");
    CHECK(r.code == 0);
    CHECK(r.out == "n=1:  0\n");
}

TEST_CASE("json output is schema 1 and round-trips") {
    RunResult r = run("roots -a 1 -b 1 -c -1/2 -n 6 --format json");
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["schema"] == 1);
    CHECK(j["rows"].size() == 6);
    CHECK(j["rows"][4]["roots"][1]["display"] == "0");
    CHECK(j["rows"][4]["roots"][1]["exact"] == true);
    // re-parse of the dump equals the parsed object
    CHECK(json::parse(j.dump()) == j);
    json a = json::parse(run("analyze -a 1 -b 1 -c -1/2 --format json").out);
    CHECK(a["schema"] == 1);
    CHECK(a["case"] == "II");
    CHECK(a["x_Delta"]["exact"] == "1/4");
    CHECK(a["n0"]["exact"] == "2");
}

TEST_CASE("csv output carries the contract header") {
    RunResult r = run("roots -a 1 -b 1 -c -1/2 -n 3 --format csv");
    CHECK(r.code == 0);
    CHECK(r.out.rfind("n, index, lo, hi, midpoint-4dp\n", 0) == 0);
}

TEST_CASE("analyze reports the degenerate c = 0 landmarks") {
    RunResult r = run("analyze -a 2 -b 8 -c 0 -t 2 -r 0");
    CHECK(r.code == 0);
    CHECK(r.out.find("x_Delta = -1/8") != std::string::npos);
    RunResult g = run("analyze -a 1 -b 2/5 -c 0 -t 1 -r -1");
    CHECK(g.out.find("x_star = -5/8") != std::string::npos);
    CHECK(g.out.find("y_star = -3/5") != std::string::npos);
}

TEST_CASE("signs reproduces the reference trace") {
    RunResult r = run("signs -a 1 -b 1 -c -1/2 --at -1 -n 6 --format json");
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    const char* want[] = {"-1", "-5/2", "-1", "11/4", "17/4", "1/8"};
    const char* side[] = {"left", "left", "left", "right", "right", "right"};
    REQUIRE(j["rows"].size() == 6);
    for (int i = 0; i < 6; ++i) {
        CHECK(j["rows"][i]["value"] == want[i]);
        CHECK(j["rows"][i]["side"] == side[i]);
        CHECK(j["rows"][i]["agrees"] == true);
    }
    CHECK(j["all_agree"] == true);
    // --at x_B shorthand: constant-sign trace a^{n-1} W_1(x_B)
    json b = json::parse(run("signs -a 1 -b 1 -c -1/2 --at x_B -n 5 --format json").out);
    CHECK(b["x0"] == "1/2");
    for (const auto& row : b["rows"]) CHECK(row["value"].get<std::string>() == "1/2");
    // c > 0 spec at 0: trace starts from W_1(0) = 0
    json z = json::parse(run("signs -a 1 -b 1 -c 1 --at 0 -n 4 --format json").out);
    CHECK(z["rows"][0]["value"] == "0");
    // Delta(0) = 5 > 0 there: the eventual-sign summary replaces the sides
    CHECK(z["eventual"]["expected"] == 1);
    CHECK(z["eventual"]["stabilized"] == true);
}

TEST_CASE("verify passes on the reference specs and fails when corrupted") {
    RunResult ok = run("verify -a 1 -b 1 -c -1/2 -n 24 --format json");
    REQUIRE(ok.code == 0);
    json j = json::parse(ok.out);
    CHECK(j["ok"] == true);
    for (const auto& t : j["theorems"]) CHECK(t["checks_failed"] == 0);
    CHECK(run("verify -a 1 -b 1 -c 1 -n 24").code == 0);
    RunResult bad = run("verify -a 1 -b 1 -c -1/2 -n 24 --corrupt --format json");
    CHECK(bad.code == 4);
    json jb = json::parse(bad.out);
    CHECK(jb["ok"] == false);
    bool witnessed = false;
    for (const auto& t : jb["theorems"])
        if (!t["failures"].empty()) witnessed = true;
    CHECK(witnessed);
}

TEST_CASE("conjecture command reports per-n verdicts") {
    RunResult r = run("conjecture -n 10 --format json");
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["all_real"] == true);
    REQUIRE(j["per_n"].size() == 11);
    CHECK(j["per_n"][2]["degree"] == 3);
    CHECK(j["per_n"][2]["real_roots"] == 3);
    CHECK(j["per_n"][1]["degree"] == 1);
}

TEST_CASE("closed-form command checks both solution shapes") {
    RunResult fib = run("closed-form -A 1 -B 1 --w1 1 -n 20 --format json");
    REQUIRE(fib.code == 0);
    json j = json::parse(fib.out);
    CHECK(j["rows"][10]["value"] == "89");
    for (const auto& row : j["rows"]) CHECK(row["closed_form_matches"] == true);
    RunResult trig = run("closed-form -A 1 -B -3/2 --w1 2 -n 30 --format json");
    json t = json::parse(trig.out);
    for (const auto& row : t["rows"]) CHECK(row["trig_form_matches"] == true);
}

TEST_CASE("config file mirrors flags and flags win") {
    std::string cfg = write_temp("cfg", "a = 1\nb = 1\nc = -1/2\nn-max = 8\ngolden = table1\n");
    CHECK(run("roots --config " + cfg).code == 0);
    // explicit flag overrides the file's table choice
    CHECK(run("roots --config " + cfg + " --golden table2").code == 3);
    std::string badkey = write_temp("badcfg", "frobnicate = 1\n");
    CHECK(run("roots --config " + badkey).code == 2);
}

TEST_CASE("batch mode merges reports in input order") {
    std::string batch = write_temp("batch", "1 1 -1/2\n1 1 1\n2 1 -1\n# comment line\n");
    RunResult r = run("roots --batch " + batch + " -n 6 --workers 2 --format json");
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    REQUIRE(j["runs"].size() == 3);
    CHECK(j["runs"][0]["spec"]["c"] == "-1/2");
    CHECK(j["runs"][1]["spec"]["c"] == "1");
    CHECK(j["runs"][2]["spec"]["a"] == "2");
    // deterministic across runs and worker counts
    RunResult r1 = run("roots --batch " + batch + " -n 6 --workers 1 --format json");
    CHECK(json::parse(r1.out) == j);
    CHECK(run("verify --batch " + batch + " -n 20 --workers 3").code == 0);
}

TEST_CASE("ROOTGEO_PRECISION env var drives refinement") {
    RunResult r = run("roots -a 1 -b 1 -c -1/2 -n 4 --format json --precision 1/1000000000000");
    json j = json::parse(r.out);
    std::string env_cmd = std::string("ROOTGEO_PRECISION=1/1000000000000 ") + ROOTGEO_CLI_PATH +
                          " roots -a 1 -b 1 -c -1/2 -n 4 --format json";
    FILE* p = popen(env_cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), got);
    pclose(p);
    CHECK(json::parse(out) == j);
}
