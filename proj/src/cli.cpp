#include "pawkit/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>

#include "pawkit/edgelist.hpp"
#include "pawkit/exact.hpp"
#include "pawkit/generator.hpp"
#include "pawkit/kernel.hpp"
#include "pawkit/packing.hpp"

namespace pawkit::cli {

namespace {

using nlohmann::ordered_json;

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write file: " + out_path);
    out << text;
}

struct RunReport {
    int n_in = 0, m_in = 0, k_in = 0;
    int n_out = 0, m_out = 0, k_out = 0;
    std::string outcome;
    std::map<std::string, int> rules_fired;
    long long size_certificate = 0;
    bool certificate_respected = true;
    double wall_time_ms = 0.0;
};

ordered_json report_to_json(const RunReport& report) {
    ordered_json j;
    j["input"] = {{"n", report.n_in}, {"m", report.m_in}, {"k", report.k_in}};
    j["output"] = {{"n", report.n_out}, {"m", report.m_out}, {"k", report.k_out}};
    j["outcome"] = report.outcome;
    j["rules_fired"] = report.rules_fired;
    j["size_certificate"] = report.size_certificate;
    j["certificate_respected"] = report.certificate_respected;
    j["wall_time_ms"] = report.wall_time_ms;
    return j;
}

ordered_json edits_to_json(const EditSet& edits) {
    ordered_json j;
    auto arr = ordered_json::array();
    for (auto [u, v] : edits.pairs()) arr.push_back(ordered_json::array({u, v}));
    j["edits"] = std::move(arr);
    j["count"] = edits.size();
    return j;
}

GenSpec spec_from_options(const GenOptions& options) {
    GenSpec spec;
    spec.seed = options.seed;
    spec.k = options.k;
    if (options.family == "uniform") {
        spec.family = UniformFamily{options.n, options.p};
    } else if (options.family == "planted") {
        PlantedBase base;
        if (options.base == "triangle-free")
            base = PlantedBase::TriangleFree;
        else if (options.base == "multipartite")
            base = PlantedBase::Multipartite;
        else
            throw GenerationError("unknown planted base: " + options.base);
        spec.family = PlantedFamily{options.n, base, options.edits};
    } else if (options.family == "rule_trigger") {
        spec.family = RuleTriggerFamily{options.rule};
    } else {
        throw GenerationError("unknown family: " + options.family);
    }
    return spec;
}

Mode parse_mode(const std::string& name) {
    auto mode = mode_from_string(name);
    if (!mode) throw std::invalid_argument("unknown mode: " + name);
    return *mode;
}

}  // namespace

int run_gen(const GenOptions& options) {
    try {
        Instance inst = generate(spec_from_options(options));
        emit(format_instance(inst), options.out);
        return kExitOk;
    } catch (const std::invalid_argument& e) {
        std::cerr << "gen: " << e.what() << '\n';
        return kExitUsage;
    }
}

int run_kernelize(const KernelizeOptions& options) {
    Instance inst;
    Mode mode;
    try {
        mode = parse_mode(options.mode);
        if (options.depth < 1) throw std::invalid_argument("depth must be >= 1");
        inst = read_instance_file(options.input);
    } catch (const std::exception& e) {
        std::cerr << "kernelize: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        auto start = std::chrono::steady_clock::now();
        KernelResult result = kernelize(inst, mode, options.depth);
        auto stop = std::chrono::steady_clock::now();

        RunReport report;
        report.n_in = static_cast<int>(inst.graph.vertex_count());
        report.m_in = static_cast<int>(inst.graph.edge_count());
        report.k_in = inst.budget;
        report.n_out = static_cast<int>(result.reduced.graph.vertex_count());
        report.m_out = static_cast<int>(result.reduced.graph.edge_count());
        report.k_out = result.reduced.budget;
        report.outcome = result.outcome == KernelOutcome::Reduced ? "reduced" : "no";
        for (int rule = 1; rule <= 4; ++rule)
            report.rules_fired["rule" + std::to_string(rule)] = 0;
        for (auto [rule, count] : result.trace.rule_counts())
            report.rules_fired["rule" + std::to_string(rule)] = count;
        report.rules_fired["component_removal"] = result.trace.component_removals();
        report.size_certificate = result.size_certificate;
        report.certificate_respected = report.n_out <= result.size_certificate;
        report.wall_time_ms =
            std::chrono::duration<double, std::milli>(stop - start).count();

        if (!options.out.empty())
            emit(kernel_result_to_json(result).dump(2) + "\n", options.out);
        if (!options.out_instance.empty() && result.outcome == KernelOutcome::Reduced)
            write_instance_file(options.out_instance, result.reduced);
        std::cout << report_to_json(report).dump(2) << '\n';
        return kExitOk;
    } catch (const std::logic_error& e) {
        std::cerr << "kernelize: " << e.what() << '\n';
        return kExitInternal;
    }
}

int run_solve(const SolveOptions& options) {
    Instance inst;
    Mode mode;
    try {
        mode = parse_mode(options.mode);
        inst = read_instance_file(options.input);
        if (!options.force &&
            (static_cast<int>(inst.graph.vertex_count()) > options.max_n ||
             inst.budget > options.max_k))
            throw std::invalid_argument(
                "instance exceeds the solver guard (n <= " +
                std::to_string(options.max_n) + ", k <= " +
                std::to_string(options.max_k) + "); pass --force to override");
    } catch (const std::exception& e) {
        std::cerr << "solve: " << e.what() << '\n';
        return kExitUsage;
    }

    auto edits = solve(inst, mode);
    if (!edits) {
        std::cout << "no\n";
        return kExitOk;
    }
    if (!verify_solution(inst.graph, *edits, inst.budget, mode)) {
        std::cerr << "solve: produced edit set failed verification\n";
        return kExitInternal;
    }
    std::cout << "yes\n";
    std::string payload = edits_to_json(*edits).dump(2) + "\n";
    if (options.out.empty())
        std::cout << payload;
    else
        emit(payload, options.out);
    return kExitOk;
}

int run_verify(const VerifyOptions& options) {
    std::vector<Mode> modes;
    try {
        for (const auto& name : options.modes) modes.push_back(parse_mode(name));
        if (options.count < 1 || options.n < 1 || options.k_max < 0 ||
            options.depth < 1)
            throw std::invalid_argument("bad verify parameters");
    } catch (const std::exception& e) {
        std::cerr << "verify: " << e.what() << '\n';
        return kExitUsage;
    }

    bool all_ok = true;
    for (Mode mode : modes) {
        int passes = 0, failures = 0;
        int max_kernel = 0;
        long long max_certificate = 0;
        bool certificates_ok = true;

        for (int i = 0; i < options.count; ++i) {
            GenSpec spec;
            spec.seed = options.seed + static_cast<std::uint64_t>(i) * 1000003ULL;
            SplitMix64 pick(spec.seed ^ 0xABCDEF1234567890ULL);
            spec.k = static_cast<int>(pick.next_below(options.k_max + 1));
            int n = 6 + static_cast<int>(pick.next_below(
                            static_cast<std::uint64_t>(std::max(1, options.n - 5))));
            switch (i % 7) {
                case 0: spec.family = UniformFamily{n, 0.08 + 0.05 * pick.next_below(5)}; break;
                case 1: spec.family = PlantedFamily{n, PlantedBase::TriangleFree, spec.k}; break;
                case 2: spec.family = PlantedFamily{n, PlantedBase::Multipartite, spec.k}; break;
                case 3: spec.family = RuleTriggerFamily{1}; break;
                case 4: spec.family = RuleTriggerFamily{2}; break;
                case 5: spec.family = RuleTriggerFamily{3}; break;
                case 6: spec.family = RuleTriggerFamily{4}; break;
            }
            Instance inst = generate(spec);

            KernelResult result = kernelize(inst, mode, options.depth);
            bool original_yes = solve(inst, mode).has_value();
            bool kernel_yes = result.outcome == KernelOutcome::Reduced &&
                              solve(result.reduced, mode).has_value();
            if (original_yes == kernel_yes)
                ++passes;
            else
                ++failures;

            int n_out = static_cast<int>(result.reduced.graph.vertex_count());
            max_kernel = std::max(max_kernel, n_out);
            max_certificate = std::max(max_certificate, result.size_certificate);
            if (n_out > result.size_certificate) certificates_ok = false;
        }

        std::cout << "mode=" << to_string(mode) << " instances=" << options.count
                  << " pass=" << passes << " fail=" << failures
                  << " max_kernel_n=" << max_kernel
                  << " max_certificate=" << max_certificate
                  << " certificate_respected=" << (certificates_ok ? "true" : "false")
                  << '\n';
        if (failures > 0 || !certificates_ok) all_ok = false;
    }
    return all_ok ? kExitOk : kExitVerificationFailure;
}

int run_replay(const ReplayOptions& options) {
    Instance inst;
    KernelResult recorded;
    try {
        inst = read_instance_file(options.instance_file);
        std::ifstream in(options.kernel_json);
        if (!in) throw std::invalid_argument("cannot open: " + options.kernel_json);
        recorded = kernel_result_from_json(nlohmann::json::parse(in));
    } catch (const std::exception& e) {
        std::cerr << "replay: " << e.what() << '\n';
        return kExitUsage;
    }

    if (recorded.outcome == KernelOutcome::No) {
        std::cout << "replay: outcome was 'no'; nothing to reproduce\n";
        return kExitOk;
    }
    Instance replayed = replay_trace(inst, recorded.trace);
    bool same = replayed.graph == recorded.reduced.graph &&
                replayed.budget == recorded.reduced.budget;
    std::cout << (same ? "replay: trace reproduces the kernel\n"
                       : "replay: MISMATCH between trace replay and kernel\n");
    return same ? kExitOk : kExitVerificationFailure;
}

}  // namespace pawkit::cli
