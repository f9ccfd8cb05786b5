#define DOCTEST_CONFIG_IMPLEMENT
#include "doctest.h"

#include "json.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

using nlohmann::json;

namespace {

std::string g_binary;

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

RunResult run(const std::string& args) {
    const std::string out_path = "/tmp/nkverify_test_out.txt";
    const std::string err_path = "/tmp/nkverify_test_err.txt";
    std::string cmd = "\"" + g_binary + "\" " + args + " > " + out_path + " 2> " +
                      err_path;
    int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out_path);
    r.err = slurp(err_path);
    std::remove(out_path.c_str());
    std::remove(err_path.c_str());
    return r;
}

json normalized(const std::string& text) {
    json j = json::parse(text);
    j["elapsed_ms"] = 0.0;
    return j;
}

} // namespace

TEST_CASE("structure suite exits clean") {
    RunResult r = run("structure");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("suite structure") == 0);
    CHECK(r.out.find("result PASS") != std::string::npos);
    CHECK(r.err.empty());
}

TEST_CASE("frame-case and surface subcommands exit clean") {
    CHECK(run("frame-case").exit_code == 0);
    CHECK(run("surface flat-positive").exit_code == 0);
    CHECK(run("surface hyperbolic-quadric").exit_code == 0);
    CHECK(run("all").exit_code == 0);
}

TEST_CASE("unknown surface reports the registry and exits 2") {
    RunResult r = run("surface no-such-surface");
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("unknown surface") != std::string::npos);
    CHECK(r.err.find("registered surfaces") != std::string::npos);
    CHECK(r.err.find("hyperbolic-st") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run("").exit_code == 2);             // no subcommand
    CHECK(run("--bogus structure").exit_code == 2);
    CHECK(run("structure --bogus").exit_code == 2);
    CHECK(run("surface").exit_code == 2);      // missing name
}

TEST_CASE("help exits 0") {
    RunResult r = run("--help");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("structure") != std::string::npos);
}

TEST_CASE("failing tolerances surface as exit 1") {
    CHECK(run("--tol 1e-30 structure").exit_code == 1);
    CHECK(run("--curv-tol 1e-30 surface hyperbolic-st").exit_code == 1);
    // without the override the per-surface curvature tolerance holds
    CHECK(run("surface hyperbolic-st").exit_code == 0);
}

TEST_CASE("json output parses and matches the text verdict") {
    RunResult r = run("--format json frame-case");
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["suite"] == "frame-case");
    CHECK(j["pass"] == true);
    CHECK(j["checks"].is_array());
    CHECK(!j["config"].contains("format"));  // config carries numeric knobs only
}

TEST_CASE("repeated runs are byte-identical up to wall time") {
    RunResult a = run("--format json structure");
    RunResult b = run("--format json structure");
    REQUIRE(a.exit_code == 0);
    REQUIRE(b.exit_code == 0);
    CHECK(normalized(a.out) == normalized(b.out));
    RunResult c = run("--format json all");
    RunResult d = run("--format json all");
    CHECK(normalized(c.out) == normalized(d.out));
}

TEST_CASE("grid and step knobs reach the surface suite") {
    RunResult r = run("--grid 3 --step 5e-4 surface flat-positive");
    CHECK(r.exit_code == 0);
    RunResult j = run("--format json --grid 3 surface flat-positive");
    CHECK(json::parse(j.out)["config"]["grid"] == 3);
}

int main(int argc, char** argv) {
    if (argc > 1 && argv[1][0] != '-') {
        g_binary = argv[1];
        --argc;
        ++argv;
    }
    if (g_binary.empty()) {
        std::fprintf(stderr, "usage: test_cli <path-to-nkverify> [doctest args]\n");
        return 1;
    }
    doctest::Context ctx(argc, argv);
    return ctx.run();
}
