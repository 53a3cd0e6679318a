#include <iostream>

#include "CLI11.hpp"
#include "pawkit/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"paw-free edge modification toolkit"};
    app.require_subcommand(1);

    pawkit::cli::GenOptions gen;
    auto* gen_cmd = app.add_subcommand("gen", "generate a seeded instance");
    gen_cmd->add_option("--family", gen.family, "uniform | planted | rule_trigger");
    gen_cmd->add_option("--n", gen.n, "vertex count");
    gen_cmd->add_option("--p", gen.p, "edge probability (uniform)");
    gen_cmd->add_option("--base", gen.base, "triangle-free | multipartite (planted)");
    gen_cmd->add_option("--edits", gen.edits, "toggled pairs (planted)");
    gen_cmd->add_option("--rule", gen.rule, "rule id 1..4 (rule_trigger)");
    gen_cmd->add_option("--k", gen.k, "budget written to the instance");
    gen_cmd->add_option("--seed", gen.seed, "PRNG seed");
    gen_cmd->add_option("--out", gen.out, "output file (default stdout)");

    pawkit::cli::KernelizeOptions kernelize;
    auto* kern_cmd = app.add_subcommand("kernelize", "reduce an instance");
    kern_cmd->add_option("file", kernelize.input, "edge-list instance")->required();
    kern_cmd->add_option("--mode", kernelize.mode, "edit | delete | add");
    kern_cmd->add_option("--depth", kernelize.depth, "marking depth (editing)");
    kern_cmd->add_option("--out", kernelize.out, "kernel JSON output file");
    kern_cmd->add_option("--out-instance", kernelize.out_instance,
                         "renumbered edge-list of the kernel");

    pawkit::cli::SolveOptions solve;
    auto* solve_cmd = app.add_subcommand("solve", "run the exact solver");
    solve_cmd->add_option("file", solve.input, "edge-list instance")->required();
    solve_cmd->add_option("--mode", solve.mode, "edit | delete | add");
    solve_cmd->add_flag("--force", solve.force, "ignore the size guard");
    solve_cmd->add_option("--max-n", solve.max_n, "guard on vertex count");
    solve_cmd->add_option("--max-k", solve.max_k, "guard on budget");
    solve_cmd->add_option("--out", solve.out, "edit-set JSON output file");

    pawkit::cli::VerifyOptions verify;
    auto* verify_cmd =
        app.add_subcommand("verify", "batch kernel-vs-solver equivalence check");
    verify_cmd->add_option("--count", verify.count, "instances per mode");
    verify_cmd->add_option("--mode", verify.modes, "modes to check (repeatable)");
    verify_cmd->add_option("--n", verify.n, "max vertex count");
    verify_cmd->add_option("--k-max", verify.k_max, "max budget");
    verify_cmd->add_option("--depth", verify.depth, "marking depth (editing)");
    verify_cmd->add_option("--seed", verify.seed, "base seed");

    pawkit::cli::ReplayOptions replay;
    auto* replay_cmd =
        app.add_subcommand("replay", "re-run a kernel trace against its input");
    replay_cmd->add_option("instance", replay.instance_file, "edge-list instance")
        ->required();
    replay_cmd->add_option("kernel", replay.kernel_json, "kernel JSON")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return pawkit::cli::kExitUsage;
    }

    try {
        if (gen_cmd->parsed()) return pawkit::cli::run_gen(gen);
        if (kern_cmd->parsed()) return pawkit::cli::run_kernelize(kernelize);
        if (solve_cmd->parsed()) return pawkit::cli::run_solve(solve);
        if (verify_cmd->parsed()) return pawkit::cli::run_verify(verify);
        if (replay_cmd->parsed()) return pawkit::cli::run_replay(replay);
    } catch (const std::logic_error& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return pawkit::cli::kExitInternal;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return pawkit::cli::kExitUsage;
    }
    return pawkit::cli::kExitUsage;
}
