#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <string>
#include <vector>

#include <json.hpp>

#include "socs/core.hpp"

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(PYRAMIDAL_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) r.out.append(buf, got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::size_t count_lines(const std::string& s) {
    std::size_t n = 0;
    for (char c : s)
        if (c == '\n') ++n;
    return n;
}

std::size_t count_substr(const std::string& s, const std::string& needle) {
    std::size_t n = 0, pos = 0;
    while ((pos = s.find(needle, pos)) != std::string::npos) {
        ++n;
        pos += needle.size();
    }
    return n;
}

// Minimal XML well-formedness check: balanced, properly nested tags;
// comments, declarations and self-closing tags allowed.
bool xml_well_formed(const std::string& s) {
    std::vector<std::string> stack;
    std::size_t i = 0;
    while (i < s.size()) {
        if (s[i] != '<') {
            ++i;
            continue;
        }
        if (s.compare(i, 4, "<!--") == 0) {
            std::size_t end = s.find("-->", i);
            if (end == std::string::npos) return false;
            i = end + 3;
            continue;
        }
        if (s.compare(i, 2, "<?") == 0) {
            std::size_t end = s.find("?>", i);
            if (end == std::string::npos) return false;
            i = end + 2;
            continue;
        }
        std::size_t end = s.find('>', i);
        if (end == std::string::npos) return false;
        std::string tag = s.substr(i + 1, end - i - 1);
        if (!tag.empty() && tag.front() == '/') {
            std::string name = tag.substr(1);
            if (stack.empty() || stack.back() != name) return false;
            stack.pop_back();
        } else if (!tag.empty() && tag.back() != '/') {
            std::string name = tag.substr(0, tag.find_first_of(" \t\n"));
            stack.push_back(name);
        }
        i = end + 1;
    }
    return stack.empty();
}

}  // namespace

TEST_CASE("solve --max-n 32 emits the 16 known rows as CSV") {
    auto r = run_cli("solve --max-n 32");
    CHECK(r.exit_code == 0);
    CHECK(count_lines(r.out) == 17);  // header + 16 rows
    CHECK(r.out.find("a,b,c,N,ell,m,k\n") == 0);
    CHECK(r.out.find("2,4,5,3,2,1,1\n") != std::string::npos);
    CHECK(r.out.find("17,34,42,25,17,8,\n") != std::string::npos);  // blank k
    CHECK(r.out.find("464,480,495,31,16,15,15\n") != std::string::npos);
}

TEST_CASE("solve --n 25 emits exactly two rows") {
    auto r = run_cli("solve --n 25");
    CHECK(r.exit_code == 0);
    CHECK(count_lines(r.out) == 3);
    CHECK(r.out.find("17,34,42") != std::string::npos);
    CHECK(r.out.find("299,312,324") != std::string::npos);
}

TEST_CASE("solve --max-n 2 emits zero rows and exits 0") {
    auto r = run_cli("solve --max-n 2");
    CHECK(r.exit_code == 0);
    CHECK(count_lines(r.out) == 1);  // header only
}

TEST_CASE("solve usage errors exit 2") {
    CHECK(run_cli("solve --max-n 1").exit_code == 2);
    CHECK(run_cli("solve --max-n 0").exit_code == 2);
    CHECK(run_cli("solve --max-n -7").exit_code == 2);
    CHECK(run_cli("solve").exit_code == 2);
    CHECK(run_cli("solve --max-n 10 --n 10").exit_code == 2);
    CHECK(run_cli("solve --max-n twelve").exit_code == 2);
}

TEST_CASE("solve JSON round-trips through the solution checker") {
    auto r = run_cli("solve --max-n 40 --format json");
    CHECK(r.exit_code == 0);
    auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["schema_version"] == "1");
    CHECK(doc["command"] == "solve");
    const auto& rows = doc["payload"]["solutions"];
    CHECK(rows.size() == 20);  // parameterized k = 1..19 plus (17,34,42)
    for (const auto& row : rows) {
        socs::BigInt a(row["a"].get<std::string>());
        socs::BigInt b(row["b"].get<std::string>());
        socs::BigInt c(row["c"].get<std::string>());
        CHECK(socs::is_socs_solution(a, b, c));
        auto k = socs::classify_parameterized(socs::SolutionTriple{a, b, c});
        if (row["k"].is_null())
            CHECK_FALSE(k.has_value());
        else
            CHECK(k->str() == row["k"].get<std::string>());
    }
}

TEST_CASE("generate 2 4 5 --count 1") {
    auto r = run_cli("generate 2 4 5 --count 1");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("A=141 B=28 u0=107 v0=9") != std::string::npos);
    CHECK(r.out.find("p=95 q=8 cf_period_length=4") != std::string::npos);
    CHECK(r.out.find("1,473,855,1046,true,odd") != std::string::npos);
}

TEST_CASE("generate rejects non-solutions with exit 3") {
    CHECK(run_cli("generate 1 2 3").exit_code == 3);
    CHECK(run_cli("generate 5 4 2").exit_code == 3);
}

TEST_CASE("generate 66 159 198 reports the Pell context") {
    auto r = run_cli("generate 66 159 198 --count 1 --format json");
    CHECK(r.exit_code == 0);
    auto doc = nlohmann::json::parse(r.out);
    const auto& ctx = doc["payload"]["context"];
    CHECK(ctx["A"] == "681522798996");
    CHECK(ctx["cf_period_length"] == 212);
    const auto& orbit = doc["payload"]["orbit"];
    REQUIRE(orbit.size() == 1);
    CHECK(orbit[0]["valid"] == true);
    CHECK(orbit[0]["parity"] == "even");
}

TEST_CASE("polygon chainsaw SVG output") {
    auto r = run_cli("polygon 59 110 135 --mode chainsaw --format svg");
    CHECK(r.exit_code == 0);
    CHECK(r.out.rfind("<?xml", 0) == 0);
    CHECK(xml_well_formed(r.out));
    // closed path with 76 segments: one M, 75 L, one Z
    CHECK(count_substr(r.out, " L ") == 75);
    CHECK(r.out.find(" Z\"") != std::string::npos);
    CHECK(r.out.find("self_intersecting: false") != std::string::npos);
}

TEST_CASE("polygon turns-mode JSON: the convex pentagon") {
    auto r = run_cli("polygon 9 12 14 --mode turns --bits 110 --format json");
    CHECK(r.exit_code == 0);
    auto doc = nlohmann::json::parse(r.out);
    const auto& payload = doc["payload"];
    CHECK(payload["vertices"].size() == 5);
    CHECK(payload["report"]["convex"] == true);
    CHECK(payload["report"]["mu"] == 0);
    CHECK(payload["squared_diagonals"][2] == "365");
}

TEST_CASE("polygon 2 4 5 chainsaw JSON carries sides 3,4,5") {
    auto r = run_cli("polygon 2 4 5 --mode chainsaw --format json");
    CHECK(r.exit_code == 0);
    auto doc = nlohmann::json::parse(r.out);
    const auto& targets = doc["payload"]["side_targets"];
    REQUIRE(targets.size() == 3);
    CHECK(targets[0] == "3");
    CHECK(targets[2] == "5");
}

TEST_CASE("polygon usage errors") {
    CHECK(run_cli("polygon 9 12 14 --mode turns --bits 1").exit_code == 2);
    CHECK(run_cli("polygon 9 12 14 --mode turns --bits 1x0").exit_code == 2);
    CHECK(run_cli("polygon 1 2 3 --mode chainsaw").exit_code == 3);
}

TEST_CASE("census output and self-test") {
    auto r = run_cli("census");
    CHECK(r.exit_code == 0);
    CHECK(count_lines(r.out) == 68);  // header + 67 rows
    CHECK(r.out.find("2,4,5,3,1,true,true,0,false") != std::string::npos);
    CHECK(r.out.find("9,12,14,5,2,true,true,0,false") != std::string::npos);
    auto again = run_cli("census");
    CHECK(again.out == r.out);  // byte-identical

    auto js = run_cli("census --format json");
    CHECK(js.exit_code == 0);
    auto doc = nlohmann::json::parse(js.out);
    CHECK(doc["schema_version"] == "1");
    const auto& rows = doc["payload"]["rows"];
    REQUIRE(rows.size() == 67);
    long convex = 0;
    for (const auto& row : rows) convex += row["convex"] == true ? 1 : 0;
    CHECK(convex == 2);
}
