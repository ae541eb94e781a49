#pragma once

#include <cstdint>

#include "expcheck/distributions.hpp"

namespace expcheck {

/// One draw of max(X_1..X_{n-s}) + sum_{j=n-s+1}^{n} X_j / j, every X fresh
/// and independent. Requires 1 <= s <= n-1.
double lhs_replicate(int n, int s, const DistributionSpec& spec, RandomStream& stream);

/// One draw of the maximum of n fresh values. Requires n >= 1.
double rhs_replicate(int n, const DistributionSpec& spec, RandomStream& stream);

struct EqualityCheckReport {
    int n;
    int s;
    int replicates;
    double ks_statistic;
    double p_value;
    std::uint64_t seed;
};

/// Simulates both sides of the distributional equation with `replicates`
/// draws each and compares them by the two-sample KS test. Replicate r of
/// either side runs on its own derived stream, so the report is a pure
/// function of the arguments. Requires replicates >= 100.
EqualityCheckReport equality_check(int n, int s, const DistributionSpec& spec, int replicates,
                                   std::uint64_t seed);

}  // namespace expcheck
