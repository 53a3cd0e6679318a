#pragma once

#include <cstdint>
#include <variant>

#include "pawkit/graph.hpp"

namespace pawkit {

/// SplitMix64 (Steele, Lea, Flood 2014). Fixed here, constants and all, so
/// that any implementation can reproduce the exact same instances from a
/// seed.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Unbiased integer in [0, bound) via rejection sampling.
    std::uint64_t next_below(std::uint64_t bound);

    /// Uniform double in [0, 1) with 53 random bits.
    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return next_unit() < p; }

private:
    std::uint64_t state_;
};

enum class PlantedBase { TriangleFree, Multipartite };

struct UniformFamily {
    int n = 0;
    double p = 0.0;
};

/// A paw-free graph assembled from components of the named shape, followed
/// by `edits` random pair toggles; a yes-instance for budgets >= edits in
/// editing mode.
struct PlantedFamily {
    int n = 0;
    PlantedBase base = PlantedBase::TriangleFree;
    int edits = 0;
};

/// Fixed-shape gadget guaranteed to fire the named reduction rule at the
/// spec's budget, padded with a small random triangle-free component.
struct RuleTriggerFamily {
    int rule_id = 1;
};

struct GenSpec {
    std::uint64_t seed = 0;
    int k = 0;
    std::variant<UniformFamily, PlantedFamily, RuleTriggerFamily> family;
};

struct GenerationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Deterministic: the same spec always yields the identical instance.
Instance generate(const GenSpec& spec);

}  // namespace pawkit
