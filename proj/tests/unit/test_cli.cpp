#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

#include "pawkit/cli.hpp"
#include "pawkit/edgelist.hpp"

using namespace pawkit;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("pawkit_test_" + std::to_string(::getpid()) + "_" +
                std::to_string(counter++));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
    static int counter;
};

int TempDir::counter = 0;

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

}  // namespace

TEST_CASE("gen writes deterministic instances and rejects bad families") {
    TempDir dir;
    cli::GenOptions gen;
    gen.family = "planted";
    gen.base = "multipartite";
    gen.n = 30;
    gen.edits = 2;
    gen.k = 2;
    gen.seed = 7;
    gen.out = dir.file("a.el");
    REQUIRE(cli::run_gen(gen) == cli::kExitOk);
    gen.out = dir.file("b.el");
    REQUIRE(cli::run_gen(gen) == cli::kExitOk);
    CHECK(slurp(dir.file("a.el")) == slurp(dir.file("b.el")));

    Instance inst = read_instance_file(dir.file("a.el"));
    CHECK(inst.graph.vertex_count() == 30);
    CHECK(inst.budget == 2);

    cli::GenOptions bad = gen;
    bad.family = "nonsense";
    CHECK(cli::run_gen(bad) == cli::kExitUsage);
}

TEST_CASE("kernelize emits JSON, an instance file, and a replayable trace") {
    TempDir dir;
    cli::GenOptions gen;
    gen.family = "uniform";
    gen.n = 24;
    gen.p = 0.15;
    gen.k = 2;
    gen.seed = 99;
    gen.out = dir.file("inst.el");
    REQUIRE(cli::run_gen(gen) == cli::kExitOk);

    cli::KernelizeOptions kern;
    kern.input = dir.file("inst.el");
    kern.mode = "edit";
    kern.out = dir.file("kernel.json");
    kern.out_instance = dir.file("kernel.el");
    REQUIRE(cli::run_kernelize(kern) == cli::kExitOk);

    // byte-identical on a rerun
    std::string first = slurp(dir.file("kernel.json"));
    REQUIRE(cli::run_kernelize(kern) == cli::kExitOk);
    CHECK(first == slurp(dir.file("kernel.json")));

    cli::ReplayOptions replay{dir.file("inst.el"), dir.file("kernel.json")};
    CHECK(cli::run_replay(replay) == cli::kExitOk);

    cli::KernelizeOptions missing = kern;
    missing.input = dir.file("nope.el");
    CHECK(cli::run_kernelize(missing) == cli::kExitUsage);

    cli::KernelizeOptions badmode = kern;
    badmode.mode = "paint";
    CHECK(cli::run_kernelize(badmode) == cli::kExitUsage);
}

TEST_CASE("solve prints verdicts and honors the guard") {
    TempDir dir;
    // the paw: yes at k=1 in every mode, no at k=0
    std::ofstream(dir.file("paw.el")) << "4 4 1\n0 1\n0 2\n1 2\n2 3\n";
    std::ofstream(dir.file("paw0.el")) << "4 4 0\n0 1\n0 2\n1 2\n2 3\n";

    cli::SolveOptions solve;
    solve.input = dir.file("paw.el");
    solve.mode = "edit";
    solve.out = dir.file("edits.json");
    CHECK(cli::run_solve(solve) == cli::kExitOk);
    CHECK(slurp(dir.file("edits.json")).find("\"count\": 1") != std::string::npos);

    solve.input = dir.file("paw0.el");
    CHECK(cli::run_solve(solve) == cli::kExitOk);  // prints "no"

    std::ofstream(dir.file("big.el")) << "70 0 1\n";
    cli::SolveOptions guarded;
    guarded.input = dir.file("big.el");
    CHECK(cli::run_solve(guarded) == cli::kExitUsage);
    guarded.force = true;
    CHECK(cli::run_solve(guarded) == cli::kExitOk);

    cli::SolveOptions malformed;
    malformed.input = dir.file("paw.el") + ".missing";
    CHECK(cli::run_solve(malformed) == cli::kExitUsage);
}

TEST_CASE("verify runs a small batch across modes") {
    cli::VerifyOptions verify;
    verify.count = 14;
    verify.n = 16;
    verify.k_max = 1;
    verify.seed = 5;
    CHECK(cli::run_verify(verify) == cli::kExitOk);
}
