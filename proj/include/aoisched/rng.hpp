#pragma once

#include <cstdint>

namespace aoisched {

/// Counter-based SplitMix64 stream. The output for a given (seed, stream,
/// draw index) is fixed by integer arithmetic alone, so runs replay bit-exactly
/// on every platform (std::*_distribution is implementation-defined).
class Rng {
public:
    explicit Rng(std::uint64_t seed, std::uint64_t stream = 0);

    std::uint64_t next_u64();
    /// Uniform on [0, 1) with 53 random bits.
    double uniform01();
    bool bernoulli(double p);
    /// Standard normal via Box-Muller (second value cached).
    double normal();
    double normal(double mean, double stddev) { return mean + stddev * normal(); }

private:
    std::uint64_t state_;
    double cached_ = 0.0;
    bool has_cached_ = false;
};

std::uint64_t splitmix64(std::uint64_t x);
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

/// Named streams so the rounding threshold and the environment never share draws.
namespace streams {
inline constexpr std::uint64_t kRounding = 1;
inline constexpr std::uint64_t kCosts = 2;
inline constexpr std::uint64_t kOpportunity = 3;
inline constexpr std::uint64_t kAdvice = 4;
inline constexpr std::uint64_t kInstance = 5;
} // namespace streams

} // namespace aoisched
