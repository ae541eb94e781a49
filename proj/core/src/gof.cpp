#include "expcheck/gof.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "expcheck/stats.hpp"

namespace expcheck {

std::string statistic_name(StatisticKind kind) {
    return kind == StatisticKind::ks ? "ks" : "cvm";
}

namespace {

// One resampling pass over mean-scaled data: B weighted sums against B
// independent maxima, reduced to the requested two-sample distance. Subsets
// come from partial Fisher-Yates passes whose swaps are undone afterwards,
// keeping the index pool allocation-free across iterations.
double resample_statistic(const std::vector<double>& scaled, int n, int resamples,
                          StatisticKind kind, RandomStream& stream) {
    const std::size_t m = scaled.size();
    std::vector<std::uint32_t> pool(m);
    std::iota(pool.begin(), pool.end(), 0u);
    std::vector<std::uint64_t> picks(static_cast<std::size_t>(n));

    std::vector<double> sums;
    std::vector<double> maxima;
    sums.reserve(static_cast<std::size_t>(resamples));
    maxima.reserve(static_cast<std::size_t>(resamples));

    auto draw_subset = [&](auto&& fold) {
        for (int j = 0; j < n; ++j) {
            const std::uint64_t p =
                static_cast<std::uint64_t>(j) + stream.below(m - static_cast<std::uint64_t>(j));
            std::swap(pool[static_cast<std::size_t>(j)], pool[p]);
            picks[static_cast<std::size_t>(j)] = p;
            fold(j, scaled[pool[static_cast<std::size_t>(j)]]);
        }
        for (int j = n - 1; j >= 0; --j) {
            std::swap(pool[static_cast<std::size_t>(j)], pool[picks[static_cast<std::size_t>(j)]]);
        }
    };

    for (int b = 0; b < resamples; ++b) {
        double weighted = 0.0;
        draw_subset([&](int j, double value) { weighted += value / (j + 1); });
        sums.push_back(weighted);

        double peak = 0.0;
        draw_subset([&](int j, double value) { peak = j == 0 ? value : std::max(peak, value); });
        maxima.push_back(peak);
    }

    std::sort(sums.begin(), sums.end());
    std::sort(maxima.begin(), maxima.end());
    return kind == StatisticKind::ks ? ks_statistic_sorted(sums, maxima)
                                     : cvm_statistic_sorted(sums, maxima);
}

std::vector<double> scale_by_mean(std::span<const double> data) {
    double total = 0.0;
    for (double v : data) {
        if (!std::isfinite(v)) throw std::invalid_argument("gof_exponentiality: non-finite value");
        if (v < 0.0) throw std::invalid_argument("gof_exponentiality: negative value");
        total += v;
    }
    const double mean = total / static_cast<double>(data.size());
    if (!(mean > 0.0)) throw std::invalid_argument("gof_exponentiality: data mean must be positive");
    std::vector<double> scaled;
    scaled.reserve(data.size());
    for (double v : data) scaled.push_back(v / mean);
    return scaled;
}

}  // namespace

GofReport gof_exponentiality(std::span<const double> data, int n, int resamples,
                             StatisticKind kind, int null_replicates, std::uint64_t seed) {
    if (n < 2) throw std::invalid_argument("gof_exponentiality: subset size must be at least 2");
    if (resamples < 1 || null_replicates < 1) {
        throw std::invalid_argument("gof_exponentiality: B and the calibration count must be positive");
    }
    const int m = static_cast<int>(data.size());
    const int min_m = std::max(2 * n, 20);
    if (m < min_m) {
        throw std::invalid_argument("gof_exponentiality: needs at least " + std::to_string(min_m) +
                                    " values, got " + std::to_string(m));
    }

    const std::vector<double> scaled = scale_by_mean(data);
    RandomStream observed_stream(seed, stream_task::gof_resample, 0);
    const double observed = resample_statistic(scaled, n, resamples, kind, observed_stream);

    int at_least = 0;
    std::vector<double> null_sample(static_cast<std::size_t>(m));
    for (int r = 0; r < null_replicates; ++r) {
        RandomStream data_stream(seed, stream_task::gof_null_data, static_cast<std::uint64_t>(r));
        double total = 0.0;
        for (auto& v : null_sample) {
            v = data_stream.exponential(1.0);
            total += v;
        }
        const double mean = total / static_cast<double>(m);
        for (auto& v : null_sample) v /= mean;

        RandomStream resample_stream(seed, stream_task::gof_null_resample,
                                     static_cast<std::uint64_t>(r));
        const double stat = resample_statistic(null_sample, n, resamples, kind, resample_stream);
        if (stat >= observed) ++at_least;
    }
    const double p = static_cast<double>(1 + at_least) / static_cast<double>(null_replicates + 1);
    return {kind, observed, p, m, n, resamples, null_replicates, seed};
}

std::vector<PowerRow> power_study(const std::vector<DistributionSpec>& specs, int m, int n,
                                  int resamples, StatisticKind kind, int null_replicates,
                                  int trials, double alpha, std::uint64_t seed) {
    if (trials < 50) throw std::invalid_argument("power_study: needs at least 50 trials");
    if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("power_study: alpha in (0,1)");

    std::vector<PowerRow> rows;
    rows.reserve(specs.size());
    std::vector<double> data(static_cast<std::size_t>(m));
    for (std::size_t f = 0; f < specs.size(); ++f) {
        int rejections = 0;
        for (int r = 0; r < trials; ++r) {
            const std::uint64_t trial_seed =
                derive_stream_seed(seed, stream_task::power_trial + f, static_cast<std::uint64_t>(r));
            RandomStream data_stream(trial_seed, stream_task::sample, 0);
            for (auto& v : data) v = specs[f].draw(data_stream);
            const std::uint64_t test_seed = derive_stream_seed(trial_seed, stream_task::power_test, 0);
            const GofReport report =
                gof_exponentiality(data, n, resamples, kind, null_replicates, test_seed);
            if (report.p_value <= alpha) ++rejections;
        }
        rows.push_back({specs[f], static_cast<double>(rejections) / static_cast<double>(trials)});
    }
    return rows;
}

}  // namespace expcheck
