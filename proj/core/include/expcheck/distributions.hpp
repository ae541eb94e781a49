#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "expcheck/rng.hpp"

namespace expcheck {

enum class Family {
    exponential,  // rate
    weibull,      // shape, scale
    gamma,        // shape, rate
    lognormal,    // mean and sd of log X
    uniform,      // upper bound
    half_normal,  // sd
};

std::optional<Family> parse_family(std::string_view name);
std::string family_name(Family family);

// A named sampling family with strictly positive parameters and support in
// [0, inf). Used both as the null and as alternatives in simulations.
struct DistributionSpec {
    Family family;
    double p1;
    double p2;

    static DistributionSpec exponential(double rate);
    static DistributionSpec weibull(double shape, double scale);
    static DistributionSpec gamma(double shape, double rate);
    static DistributionSpec lognormal(double log_mean, double log_sd);
    static DistributionSpec uniform(double upper);
    static DistributionSpec half_normal(double sd);

    /// Builds a spec of the given family from the flag-style parameter set.
    static DistributionSpec from_params(Family family, double rate, double shape, double scale,
                                        double sigma, double upper);

    double draw(RandomStream& stream) const;

    /// e.g. "weibull(shape=2, scale=1)".
    std::string label() const;
};

struct SampleBatch {
    std::vector<double> values;
    std::uint64_t seed;
    DistributionSpec spec;
};

/// m i.i.d. draws, fully determined by (spec, m, seed).
SampleBatch sample(const DistributionSpec& spec, int m, std::uint64_t seed);

}  // namespace expcheck
