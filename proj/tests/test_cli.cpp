// Golden-file tests for every CLI subcommand, plus exit-code behavior.
// Set UPDATE_GOLDEN=1 to regenerate the expected outputs.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(CLUSTERX_BIN) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    std::array<char, 4096> buf;
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.output.append(buf.data(), got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string input(const std::string& name) {
    return std::string(GOLDEN_DIR) + "/inputs/" + name;
}

void check_golden(const std::string& name, const std::string& args, int expected_exit = 0) {
    CAPTURE(name);
    RunResult r = run_cli(args);
    CHECK(r.exit_code == expected_exit);
    std::string golden_path = std::string(GOLDEN_DIR) + "/" + name + ".golden";
    if (std::getenv("UPDATE_GOLDEN")) {
        std::ofstream out(golden_path);
        out << r.output;
        return;
    }
    std::ifstream in(golden_path);
    REQUIRE_MESSAGE(in.good(), ("missing golden file " + golden_path).c_str());
    std::ostringstream expected;
    expected << in.rdbuf();
    CHECK(r.output == expected.str());
}

}  // namespace

TEST_CASE("golden outputs for every subcommand") {
    check_golden("mutate", "mutate --seed " + input("a2.json") + " --at 0");
    check_golden("graph", "graph --seed " + input("a2.json") + " --transitions");
    check_golden("trop-mutate", "trop-mutate --seed " + input("a2.json") + " --point " +
                                    input("point20.json") + " --at 0");
    check_golden("cones", "cones --seed " + input("a2.json") + " --point " +
                              input("point10.json"));
    check_golden("valuation", "valuation --f " + input("f.txt") + " --point " +
                                  input("point35.json"));
    check_golden("flip", "flip --triangulation " + input("t6.json") + " --diagonal 3,6");
    check_golden("chart", "chart --config " + input("conf6.json") + " --triangulation " +
                              input("t6.json"));
    check_golden("associahedron", "associahedron --size 6 --codim 2");
    check_golden("canon", "canon --lamination " + input("lam5.json") + " --triangulation " +
                              input("t5.json") + " --check-positivity");
    check_golden("laminations", "laminations --size 5 --bound 1");
    check_golden("completion", "completion --seed " + input("a2.json"));
    check_golden("torus-json", "torus-boundary --max-len 3 --format json --rays");
    check_golden("torus-svg", "torus-boundary --max-len 2 --format svg");
    check_golden("verify-torus", "verify --suite torus");
}

TEST_CASE("exit codes") {
    // missing input file: 2
    CHECK(run_cli("mutate --seed /nonexistent/seed.json --at 0").exit_code == 2);
    // malformed direction: 2
    CHECK(run_cli("mutate --seed " + input("a2.json") + " --at 9").exit_code == 2);
    // infinite type hits the chart bound: 3
    CHECK(run_cli("graph --seed " + input("torus.json") + " --max-nodes 10").exit_code == 3);
    CHECK(run_cli("completion --seed " + input("torus.json") + " --max-nodes 10").exit_code == 3);
    // unknown verify suite: 2
    CHECK(run_cli("verify --suite bogus").exit_code == 2);
    // invalid partition data inside a lamination: 2
    CHECK(run_cli("canon --lamination " + input("a2.json") + " --triangulation " +
                  input("t5.json"))
              .exit_code == 2);
}

TEST_CASE("outputs are byte-identical across runs") {
    std::string args = "graph --seed " + input("a2.json") + " --transitions";
    CHECK(run_cli(args).output == run_cli(args).output);
    std::string verify_args = "verify --suite torus --rng-seed 123";
    CHECK(run_cli(verify_args).output == run_cli(verify_args).output);
}
