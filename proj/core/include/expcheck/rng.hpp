#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>

namespace expcheck {

/// SplitMix64 finalizer; the building block of the stream-derivation scheme.
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// Seed for replicate `replicate` of task `task` under a base seed:
/// mix64(mix64(mix64(base) ^ task) ^ replicate). Every parallel unit of work
/// owns one derived stream, so results never depend on scheduling.
inline std::uint64_t derive_stream_seed(std::uint64_t base, std::uint64_t task,
                                        std::uint64_t replicate) {
    return mix64(mix64(mix64(base) ^ task) ^ replicate);
}

// Task labels used by the library-level pipelines (documented in the README).
namespace stream_task {
inline constexpr std::uint64_t sample = 1;
inline constexpr std::uint64_t equality_lhs = 2;
inline constexpr std::uint64_t equality_rhs = 3;
inline constexpr std::uint64_t gof_resample = 4;
inline constexpr std::uint64_t gof_null_data = 5;
inline constexpr std::uint64_t gof_null_resample = 6;
inline constexpr std::uint64_t power_trial = 16;  // + family index
inline constexpr std::uint64_t power_test = 7;
}  // namespace stream_task

// Deterministic generator stream. The samplers are written out explicitly
// (inversion, Box-Muller, Marsaglia-Tsang) instead of using the standard
// <random> distributions, whose algorithms are implementation-defined; this
// keeps output byte-stable for a fixed seed.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

    RandomStream(std::uint64_t base, std::uint64_t task, std::uint64_t replicate)
        : engine_(derive_stream_seed(base, task, replicate)) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform on [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, bound) by the multiply-shift reduction.
    std::uint64_t below(std::uint64_t bound) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next_u64()) * bound) >> 64);
    }

    double exponential(double rate) { return -std::log1p(-uniform()) / rate; }

    double uniform_upper(double upper) { return upper * uniform(); }

    double weibull(double shape, double scale) {
        return scale * std::pow(-std::log1p(-uniform()), 1.0 / shape);
    }

    /// Standard normal via Box-Muller; consumes exactly two uniforms.
    double normal() {
        const double u1 = uniform();
        const double u2 = uniform();
        const double radius = std::sqrt(-2.0 * std::log1p(-u1));
        return radius * std::cos(6.283185307179586476925286766559 * u2);
    }

    double half_normal(double sigma) { return sigma * std::abs(normal()); }

    double lognormal(double log_mean, double log_sd) {
        return std::exp(log_mean + log_sd * normal());
    }

    /// Marsaglia-Tsang; shapes below one go through the boosting identity.
    double gamma(double shape, double rate) {
        if (shape < 1.0) {
            const double boosted = gamma(shape + 1.0, rate);
            return boosted * std::pow(uniform(), 1.0 / shape);
        }
        const double d = shape - 1.0 / 3.0;
        const double c = 1.0 / std::sqrt(9.0 * d);
        for (;;) {
            double z = 0.0;
            double v = 0.0;
            do {
                z = normal();
                v = 1.0 + c * z;
            } while (v <= 0.0);
            const double v3 = v * v * v;
            const double u = uniform();
            if (u < 1.0 - 0.0331 * z * z * z * z) return d * v3 / rate;
            if (std::log(u) < 0.5 * z * z + d * (1.0 - v3 + std::log(v3))) return d * v3 / rate;
        }
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace expcheck
