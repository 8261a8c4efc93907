#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace rvnorm {

/// Counter-based 64-bit generator (SplitMix64). The state walks a Weyl
/// sequence and the output is a stateless bit mix, so independent substreams
/// are derived from (seed, stream_id) at construction with no jump-ahead
/// machinery. Draws are reproducible regardless of thread scheduling as long
/// as each worker owns its own stream id.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed, std::uint64_t stream_id = 0) noexcept
        : state_(mix64(mix64(seed + kGolden) ^ (stream_id * kMul))) {}

    std::uint64_t next_u64() noexcept {
        state_ += kGolden;
        return mix64(state_);
    }

    /// Uniform draw in the open interval (0, 1); endpoints are never returned,
    /// so log(u) and log(1-u) are always finite.
    double uniform() noexcept {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    }

    /// Uniform draw on [a, b].
    double uniform(double a, double b) noexcept { return a + (b - a) * uniform(); }

    /// One standard normal via Box-Muller (consumes two uniforms).
    double normal() noexcept {
        const double u1 = uniform();
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) *
               std::cos(2.0 * std::numbers::pi * u2);
    }

    /// A Box-Muller pair; cheaper than two normal() calls when filling vectors.
    void normal_pair(double& z0, double& z1) noexcept {
        const double u1 = uniform();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        z0 = r * std::cos(2.0 * std::numbers::pi * u2);
        z1 = r * std::sin(2.0 * std::numbers::pi * u2);
    }

    /// +1 or -1 with equal probability.
    double rademacher() noexcept {
        return (next_u64() >> 63) ? 1.0 : -1.0;
    }

    /// Exponential with the given rate.
    double exponential(double rate) noexcept {
        return -std::log(uniform()) / rate;
    }

private:
    static constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ull;
    static constexpr std::uint64_t kMul = 0xda942042e4dd58b5ull;

    static std::uint64_t mix64(std::uint64_t z) noexcept {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    std::uint64_t state_;
};

} // namespace rvnorm
