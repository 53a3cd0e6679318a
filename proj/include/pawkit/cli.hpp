#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace pawkit::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailure = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInternal = 3;

struct GenOptions {
    std::string family = "uniform";  // uniform | planted | rule_trigger
    int n = 20;
    double p = 0.2;
    std::string base = "triangle-free";  // triangle-free | multipartite
    int edits = 0;
    int rule = 1;
    int k = 0;
    std::uint64_t seed = 0;
    std::string out;  // empty = stdout
};

struct KernelizeOptions {
    std::string input;
    std::string mode = "edit";
    int depth = 6;
    std::string out;           // KernelResult JSON; empty = stdout only report
    std::string out_instance;  // optional renumbered edge-list of the kernel
};

struct SolveOptions {
    std::string input;
    std::string mode = "edit";
    bool force = false;
    int max_n = 64;
    int max_k = 8;
    std::string out;  // optional EditSet JSON
};

struct VerifyOptions {
    int count = 100;
    std::vector<std::string> modes = {"edit", "delete", "add"};
    int n = 30;
    int k_max = 2;
    int depth = 6;
    std::uint64_t seed = 1;
};

struct ReplayOptions {
    std::string instance_file;
    std::string kernel_json;
};

int run_gen(const GenOptions& options);
int run_kernelize(const KernelizeOptions& options);
int run_solve(const SolveOptions& options);
int run_verify(const VerifyOptions& options);
int run_replay(const ReplayOptions& options);

}  // namespace pawkit::cli
