#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <string>
#include <sys/wait.h>

// End-to-end checks of the installed binary: exit codes, golden outputs,
// determinism. BRAUER_CLI_PATH and BRAUER_DATA_DIR come from the build.

namespace {

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run(const std::string& args) {
    std::string command = std::string(BRAUER_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string output;
    char buffer[4096];
    std::size_t got;
    while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0)
        output.append(buffer, got);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, output};
}

std::string data(const std::string& name) {
    return std::string(BRAUER_DATA_DIR) + "/" + name;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

} // namespace

TEST_CASE("validate: exit codes reflect the report") {
    auto ok = run("validate " + data("fourpolygons.json"));
    CHECK(ok.exit_code == 0);
    CHECK(ok.output == "valid Brauer configuration\n");

    auto bad = run("validate " + data("invalid_singleton.json"));
    CHECK(bad.exit_code == 1);
    CHECK(bad.output.find("C2") != std::string::npos);

    CHECK(run("validate /nonexistent/file.json").exit_code == 2);

    std::string garbled = "/tmp/brauer_cli_garbled.json";
    std::ofstream(garbled) << "{ not json";
    CHECK(run("validate " + garbled).exit_code == 2);
    std::remove(garbled.c_str());
}

TEST_CASE("quiver: golden DOT output, byte-identical across runs") {
    auto first = run("quiver " + data("fourpolygons.json"));
    CHECK(first.exit_code == 0);
    CHECK(first.output == slurp(data("golden/fourpolygons.quiver.dot")));
    CHECK(run("quiver " + data("fourpolygons.json")).output == first.output);
}

TEST_CASE("quiver: the two-loop sample renders one node with two loops") {
    auto result = run("quiver " + data("twoloops.json"));
    CHECK(result.exit_code == 0);
    CHECK(result.output.find("// vertices: 1  arrows: 2") != std::string::npos);
    std::size_t loops = 0, at = 0;
    while ((at = result.output.find("\"v1\" -> \"v1\"", at)) != std::string::npos) {
        ++loops;
        ++at;
    }
    CHECK(loops == 2);
}

TEST_CASE("cartan: grid and csv formats") {
    auto grid = run("cartan " + data("fourpolygons.json"));
    CHECK(grid.exit_code == 0);
    CHECK(grid.output == slurp(data("golden/fourpolygons.cartan.txt")));

    auto csv = run("cartan --format csv " + data("fourpolygons.json"));
    CHECK(csv.exit_code == 0);
    CHECK(csv.output == slurp(data("golden/fourpolygons.cartan.csv")));

    CHECK(run("cartan --format nope " + data("fourpolygons.json")).exit_code == 2);
}

TEST_CASE("report: dimension JSON") {
    auto result = run("report " + data("fourpolygons.json"));
    CHECK(result.exit_code == 0);
    auto doc = nlohmann::json::parse(result.output);
    CHECK(doc["algebra_dim"] == 48);
    CHECK(doc["center_dim"].is_null());
    CHECK(doc["center_dim_reason"].get<std::string>().find("not a set") != std::string::npos);
    CHECK(doc["projective_lengths"]["1"] == 12);
    CHECK(doc["projective_lengths"]["3"] == 20);

    auto twoloop = run("report " + data("twoloops.json"));
    CHECK(nlohmann::json::parse(twoloop.output)["algebra_dim"] == 4);
}

TEST_CASE("relations: exact text for the two-loop sample") {
    auto result = run("relations " + data("twoloops.json"));
    CHECK(result.exit_code == 0);
    CHECK(result.output ==
          "T1: (a1_1 a1_2)^1 - (a1_2 a1_1)^1\n"
          "T2: (a1_1 a1_2)^1 a1_1\n"
          "T2: (a1_2 a1_1)^1 a1_2\n"
          "T3: a1_1 a1_1\n"
          "T3: a1_2 a1_2\n");
}

TEST_CASE("group: occurrence table and lattice listing") {
    auto occ = run("group cyclic 12 occ");
    CHECK(occ.exit_code == 0);
    CHECK(occ.output == slurp(data("golden/cyclic12.occ.txt")));

    auto lattice = run("group cyclic 12 lattice");
    CHECK(lattice.exit_code == 0);
    CHECK(lattice.output.find("H4 = {0, 3, 6, 9}") != std::string::npos);

    auto from_file = run("group file " + data("groups/klein_table.json") + " lattice");
    CHECK(from_file.exit_code == 0);
    CHECK(from_file.output.find("subgroups: 5") != std::string::npos);
}

TEST_CASE("group: induce emits a loadable configuration") {
    auto induced = run("group cyclic 12 induce");
    CHECK(induced.exit_code == 0);

    std::string path = "/tmp/brauer_cli_induced.json";
    std::ofstream(path) << induced.output;
    CHECK(run("validate " + path).exit_code == 0);
    auto report = run("report " + path);
    CHECK(nlohmann::json::parse(report.output)["center_dim"] == 6);
    std::remove(path.c_str());

    auto degenerate = run("group cyclic 7 induce");
    CHECK(degenerate.exit_code == 0);
    auto doc = nlohmann::json::parse(degenerate.output);
    CHECK(doc["degenerate"] == true);
    CHECK(doc["center_dim"] == 2);
}

TEST_CASE("group: verify exits zero only when all verdicts pass") {
    auto result = run("group cyclic 12 verify");
    CHECK(result.exit_code == 0);
    CHECK(result.output.find("FAIL") == std::string::npos);
    CHECK(result.output.find("center_equals_subgroup_count: PASS [6 = 6]") != std::string::npos);

    auto seeded = run("group symmetric 4 verify --seed 7");
    CHECK(seeded.exit_code == 0);
    CHECK(seeded.output.find("seed=7") != std::string::npos);
}

TEST_CASE("zn: identity sweep for one order") {
    auto result = run("zn 12");
    CHECK(result.exit_code == 0);
    CHECK(result.output.find("occ_sum_equals_sigma: PASS [28 = 28]") != std::string::npos);
    CHECK(result.output.find("occ_sum_vs_gcd[k=4]: PASS [14 = 14]") != std::string::npos);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run("").exit_code == 2);
    CHECK(run("frobnicate x").exit_code == 2);
    CHECK(run("group cyclic 12 dance").exit_code == 2);
    CHECK(run("zn").exit_code == 2);
}

TEST_CASE("--out writes the file instead of stdout") {
    std::string path = "/tmp/brauer_cli_out.dot";
    auto result = run("quiver " + data("fourpolygons.json") + " --out " + path);
    CHECK(result.exit_code == 0);
    CHECK(result.output.empty());
    CHECK(slurp(path) == slurp(data("golden/fourpolygons.quiver.dot")));
    std::remove(path.c_str());
}
