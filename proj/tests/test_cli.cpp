#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

struct RunResult {
    int code = -1;
    std::string out;
};

// Run the CLI with the given arguments, capturing stdout.
RunResult run(const std::string& args) {
    std::string outfile = std::string("cli_out_") + std::to_string(rand()) + ".txt";
    std::string cmd = std::string(GMAK_CLI_PATH) + " " + args + " > " + outfile + " 2>&1";
    int rc = std::system(cmd.c_str());
    RunResult r;
    r.code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    std::ifstream in(outfile);
    std::ostringstream os;
    os << in.rdbuf();
    r.out = os.str();
    std::remove(outfile.c_str());
    return r;
}

std::string fixture(const std::string& name) {
    return std::string(GMAK_FIXTURE_DIR) + "/" + name;
}

} // namespace

TEST_CASE("analyze, human and JSON output") {
    RunResult human = run("analyze " + fixture("lotka.gmak"));
    CHECK(human.code == 0);
    CHECK(human.out.find("weakly_reversible=yes") != std::string::npos);
    CHECK(human.out.find("existence: holds") != std::string::npos);

    RunResult js = run("analyze --json " + fixture("lotka.gmak"));
    CHECK(js.code == 0);
    nlohmann::json j = nlohmann::json::parse(js.out);
    CHECK(j["schema"] == "gmak-report/1");
    CHECK(j["network"]["m"] == 3);
    CHECK(j["checks"].is_array());

    // Determinism: byte-identical reports.
    RunResult js2 = run("analyze --json " + fixture("lotka.gmak"));
    CHECK(js.out == js2.out);
}

TEST_CASE("check exit codes follow the verdict") {
    CHECK(run("check uniqueness " + fixture("lotka.gmak")).code == 0);
    CHECK(run("check existence " + fixture("sir.gmak")).code == 1);
    // Single-cycle bracket on Lotka: necessary passes, sufficient does not.
    CHECK(run("check cycle-stability " + fixture("lotka.gmak")).code == 2);
    CHECK(run("check nonsense " + fixture("lotka.gmak")).code == 3);
    CHECK(run("check existence no_such_file.gmak").code == 3);

    // Parameter overrides flip the verdict.
    CHECK(run("check prop-pmatrix " + fixture("lotka.gmak") +
              " --param alpha=1/2 --param beta=1/2")
              .code == 0);
    CHECK(run("check prop-pmatrix " + fixture("lotka.gmak") +
              " --param alpha=1 --param beta=1")
              .code == 1);
}

TEST_CASE("equilibrium subcommand") {
    RunResult r = run("cbe " + fixture("lotka.gmak") +
                      " --rates k12=1 --rates k23=2 --rates k31=3 --json");
    CHECK(r.code == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["found"] == true);
    CHECK(j["x"].size() == 2);
    CHECK(j["residual"].get<double>() <= 1e-9);

    CHECK(run("cbe " + fixture("lotka.gmak") + " --rates k12=1").code == 3);
}
