#pragma once

#include <cstdint>
#include <random>

namespace perfclust {

/// Seeded generator with platform-independent output.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the C++
/// standard. The standard distributions are not (their algorithms are
/// implementation-defined), so bounded integers and normal deviates are
/// derived here from raw engine output:
///   - uniform_index: Lemire's multiply-shift with rejection (unbiased);
///   - uniform01: top 53 bits scaled into [0, 1);
///   - normal: Box-Muller, caching the second deviate.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform integer in [0, bound). bound must be positive.
    std::uint64_t uniform_index(std::uint64_t bound);

    /// Uniform double in [0, 1).
    double uniform01();

    /// Standard normal deviate.
    double normal();

private:
    std::mt19937_64 engine_;
    double cached_normal_ = 0.0;
    bool has_cached_normal_ = false;
};

}  // namespace perfclust
