#include "expcheck/equality.hpp"

#include <algorithm>
#include <stdexcept>

#include "expcheck/stats.hpp"

namespace expcheck {

double lhs_replicate(int n, int s, const DistributionSpec& spec, RandomStream& stream) {
    if (n < 2 || s < 1 || s > n - 1) {
        throw std::invalid_argument("lhs_replicate: need n >= 2 and 1 <= s <= n-1");
    }
    double value = spec.draw(stream);
    for (int i = 1; i < n - s; ++i) value = std::max(value, spec.draw(stream));
    for (int j = n - s + 1; j <= n; ++j) value += spec.draw(stream) / j;
    return value;
}

double rhs_replicate(int n, const DistributionSpec& spec, RandomStream& stream) {
    if (n < 1) throw std::invalid_argument("rhs_replicate: n must be positive");
    double value = spec.draw(stream);
    for (int i = 1; i < n; ++i) value = std::max(value, spec.draw(stream));
    return value;
}

EqualityCheckReport equality_check(int n, int s, const DistributionSpec& spec, int replicates,
                                   std::uint64_t seed) {
    if (replicates < 100) throw std::invalid_argument("equality_check: needs at least 100 replicates");
    std::vector<double> lhs;
    std::vector<double> rhs;
    lhs.reserve(static_cast<std::size_t>(replicates));
    rhs.reserve(static_cast<std::size_t>(replicates));
    for (int r = 0; r < replicates; ++r) {
        RandomStream stream(seed, stream_task::equality_lhs, static_cast<std::uint64_t>(r));
        lhs.push_back(lhs_replicate(n, s, spec, stream));
    }
    for (int r = 0; r < replicates; ++r) {
        RandomStream stream(seed, stream_task::equality_rhs, static_cast<std::uint64_t>(r));
        rhs.push_back(rhs_replicate(n, spec, stream));
    }
    const KsResult ks = ks_two_sample(std::move(lhs), std::move(rhs));
    return {n, s, replicates, ks.statistic, ks.p_value, seed};
}

}  // namespace expcheck
