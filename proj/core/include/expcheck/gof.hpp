#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "expcheck/distributions.hpp"

namespace expcheck {

enum class StatisticKind { ks, cvm };

std::string statistic_name(StatisticKind kind);

struct GofReport {
    StatisticKind kind;
    double value;
    double p_value;
    int m;                // sample size
    int n;                // subset size
    int resamples;        // B
    int null_replicates;  // calibration replicates
    std::uint64_t seed;
};

// Goodness-of-fit test for exponentiality. The data are scaled by their mean
// (making the statistic scale-invariant and the null parameter-free); B
// random ordered n-subsets feed the weighted sums u_{pi(1)} + u_{pi(2)}/2 +
// ... + u_{pi(n)}/n while B independent n-subsets feed plain maxima; under
// exponentiality the two clouds share one distribution. The p-value comes
// from null_replicates reruns of the identical pipeline on unit-exponential
// samples of the same size: p = (1 + #{null >= observed}) / (null_replicates + 1).
GofReport gof_exponentiality(std::span<const double> data, int n, int resamples,
                             StatisticKind kind, int null_replicates, std::uint64_t seed);

struct PowerRow {
    DistributionSpec spec;
    double rejection_rate;
};

/// Per family: the fraction of `trials` independent datasets of size m whose
/// test p-value lands at or below alpha. Deterministic under the seed.
/// Requires trials >= 50.
std::vector<PowerRow> power_study(const std::vector<DistributionSpec>& specs, int m, int n,
                                  int resamples, StatisticKind kind, int null_replicates,
                                  int trials, double alpha, std::uint64_t seed);

}  // namespace expcheck
