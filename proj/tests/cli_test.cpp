// End-to-end checks of the command-line surface: output formats, exit
// codes, determinism. Spawns the real binary.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "irt/lattice.hpp"
#include "irt/point_io.hpp"

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

std::string temp_path(const std::string& name) {
    return std::string("/tmp/irtlab_cli_test_") + name;
}

RunResult run(const std::string& args) {
    const std::string out_path = temp_path("stdout.txt");
    const std::string cmd =
        std::string(IRTLAB_CLI_PATH) + " " + args + " > " + out_path + " 2>/dev/null";
    const int status = std::system(cmd.c_str());
    RunResult result;
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream in(out_path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    result.out = buffer.str();
    return result;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    out << content;
}

std::string first_line(const std::string& s) {
    return s.substr(0, s.find('\n'));
}

}  // namespace

TEST_CASE("count command") {
    const std::string grid = temp_path("grid3.txt");
    write_file(grid, "0 0\n0 1\n0 2\n1 0\n1 1\n1 2\n2 0\n2 1\n2 2\n");

    RunResult r = run("count " + grid);
    CHECK(r.exit_code == 0);
    CHECK(first_line(r.out) == "28");

    RunResult with_oracle = run("count --oracle " + grid);
    CHECK(with_oracle.exit_code == 0);
    CHECK(first_line(with_oracle.out) == "28");

    RunResult degrees = run("count --degrees " + grid);
    CHECK(degrees.exit_code == 0);
    CHECK(degrees.out.find("1 1 8") != std::string::npos);  // grid center row

    RunResult json = run("count --json --degrees " + grid);
    CHECK(json.exit_code == 0);
    CHECK(json.out.find("\"count\":28") != std::string::npos);
    CHECK(json.out.find("\"degrees\"") != std::string::npos);
}

TEST_CASE("count exit codes") {
    const std::string dup = temp_path("dup.txt");
    write_file(dup, "0 0\n0 0\n");
    CHECK(run("count " + dup).exit_code == 2);

    const std::string bad = temp_path("bad.txt");
    write_file(bad, "0\n");
    CHECK(run("count " + bad).exit_code == 2);

    CHECK(run("count /nonexistent/file.txt").exit_code == 2);

    // oracle on a set larger than the cap is a budget error
    const std::string square = temp_path("square.txt");
    write_file(square, "0 0\n1 0\n1 1\n0 1\n");
    CHECK(run("count --oracle --oracle-cap 3 " + square).exit_code == 4);
}

TEST_CASE("construct commands and round trip") {
    RunResult grid = run("construct grid --k 3");
    CHECK(grid.exit_code == 0);
    int lines = 0;
    for (char c : grid.out) lines += c == '\n';
    CHECK(lines == 9);

    RunResult counted = run("construct --count grid --k 3");
    CHECK(counted.out.find("# count_irt = 28") != std::string::npos);

    // output parses back to the identical set
    const std::string disk_path = temp_path("disk.txt");
    RunResult disk = run("construct disk --n 100");
    CHECK(disk.exit_code == 0);
    write_file(disk_path, disk.out);
    RunResult recount = run("count " + disk_path);
    CHECK(recount.exit_code == 0);

    RunResult shifted = run("construct disk --n 4 --lattice shifted");
    CHECK(shifted.exit_code == 0);
    CHECK(shifted.out.find("1/2") != std::string::npos);

    RunResult twodisk = run("construct --count two-disk --n 100 --x 0.0356067");
    CHECK(twodisk.exit_code == 0);
    CHECK(twodisk.out.find("# A: 97") != std::string::npos);
    CHECK(twodisk.out.find("# B: 3") != std::string::npos);

    CHECK(run("construct grid --k 0").exit_code == 2);
    CHECK(run("construct two-disk --n 100 --x 1.5").exit_code == 2);
    CHECK(run("construct disk --n 10 --lattice diagonal").exit_code == 2);
}

TEST_CASE("construct output is deterministic") {
    RunResult a = run("construct disk --n 60");
    RunResult b = run("construct disk --n 60");
    CHECK(a.out == b.out);
}

TEST_CASE("construct output parses back to the same set") {
    RunResult disk = run("construct disk --n 100");
    REQUIRE(disk.exit_code == 0);
    std::istringstream in(disk.out);
    CHECK(irt::parse_point_file(in) == irt::disk_lattice(100));

    RunResult twodisk = run("construct two-disk --n 50 --x 0.3");
    REQUIRE(twodisk.exit_code == 0);
    auto [a, b] = irt::two_disk({50, 0.3});
    std::istringstream in2(twodisk.out);
    CHECK(irt::parse_point_file(in2) == irt::set_union(a, b));
}

TEST_CASE("coefficient command") {
    RunResult at = run("coefficient --x 0.0356067");
    CHECK(at.exit_code == 0);
    CHECK(at.out.find("branch = low") != std::string::npos);
    CHECK(at.out.find("c = 0.43306") != std::string::npos);

    RunResult curve = run("coefficient --curve 0.01 0.99 99");
    CHECK(curve.exit_code == 0);
    CHECK(first_line(curve.out) == "x,c,branch");
    int rows = -1;  // header
    for (char c : curve.out) rows += c == '\n';
    CHECK(rows == 99);
    CHECK(run("coefficient --curve 0.1 0.9 1").exit_code == 2);

    RunResult opt = run("coefficient --optimize");
    CHECK(opt.exit_code == 0);
    CHECK(opt.out.find("x_star = 0.03560") != std::string::npos);
    CHECK(opt.out.find("c_star = 0.43306") != std::string::npos);

    CHECK(run("coefficient --x 1.5").exit_code == 2);
    CHECK(run("coefficient").exit_code == 2);
    CHECK(run("coefficient --x 0.2 --optimize").exit_code == 2);
}

TEST_CASE("search commands") {
    RunResult ex = run("search exhaustive --n 5 --window 5");
    CHECK(ex.exit_code == 0);
    CHECK(ex.out.find("\"best_count\":8") != std::string::npos);

    RunResult budget = run("search exhaustive --n 7 --window 5 --budget 10");
    CHECK(budget.exit_code == 4);

    RunResult greedy = run("search greedy --seed grid3 --n 12");
    CHECK(greedy.exit_code == 0);
    int records = 0;
    for (char c : greedy.out) records += c == '\n';
    CHECK(records == 4);  // n = 9..12
    CHECK(first_line(greedy.out).find("\"best_count\":28") != std::string::npos);

    CHECK(run("search exhaustive --n 12 --window 5").exit_code == 2);
    CHECK(run("search greedy --seed nonexistent-seed --n 10").exit_code == 2);
}

TEST_CASE("verify commands") {
    RunResult lemmas = run("verify lemmas --sets 40 --seed 7");
    CHECK(lemmas.exit_code == 0);
    CHECK(lemmas.out.find("nx_cap_ny<=1: PASS (40/40)") != std::string::npos);
    CHECK(lemmas.out.find("FAIL") == std::string::npos);

    RunResult bounds = run("verify bounds");
    CHECK(bounds.exit_code == 0);
    CHECK(first_line(bounds.out) == "n,upper_bound");
    CHECK(bounds.out.find("3,1\n") != std::string::npos);

    RunResult all = run("verify all --sets 10 --seed 3");
    CHECK(all.exit_code == 0);
}
