#include "expcheck/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace expcheck {

double kolmogorov_tail(double lambda) {
    if (!(lambda > 0.0)) return 1.0;
    const double a2 = -2.0 * lambda * lambda;
    double sign = 2.0;
    double sum = 0.0;
    double prev_term = 0.0;
    for (int j = 1; j <= 128; ++j) {
        const double term = sign * std::exp(a2 * j * j);
        sum += term;
        if (std::abs(term) <= 1e-12 * std::abs(sum) || std::abs(term) <= 1e-3 * prev_term) {
            break;
        }
        prev_term = std::abs(term);
        sign = -sign;
    }
    sum = std::min(sum, 1.0);
    return std::max(sum, std::numeric_limits<double>::min());
}

namespace {

// Merge scan over two sorted samples. At every distinct pooled value the
// visitor sees both ecdfs (right-continuous) and the pooled tie count.
template <typename Visitor>
void scan_pooled(const std::vector<double>& a, const std::vector<double>& b, Visitor&& visit) {
    const std::size_t na = a.size();
    const std::size_t nb = b.size();
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < na || j < nb) {
        double value;
        if (j >= nb || (i < na && a[i] <= b[j])) {
            value = a[i];
        } else {
            value = b[j];
        }
        std::size_t ties = 0;
        while (i < na && a[i] == value) {
            ++i;
            ++ties;
        }
        while (j < nb && b[j] == value) {
            ++j;
            ++ties;
        }
        visit(static_cast<double>(i) / static_cast<double>(na),
              static_cast<double>(j) / static_cast<double>(nb), ties);
    }
}

}  // namespace

double ks_statistic_sorted(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.empty() || b.empty()) throw std::invalid_argument("ks_statistic_sorted: empty sample");
    double sup = 0.0;
    scan_pooled(a, b, [&](double fa, double fb, std::size_t) {
        sup = std::max(sup, std::abs(fa - fb));
    });
    return sup;
}

double cvm_statistic_sorted(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.empty() || b.empty()) throw std::invalid_argument("cvm_statistic_sorted: empty sample");
    const double pooled = static_cast<double>(a.size() + b.size());
    double acc = 0.0;
    scan_pooled(a, b, [&](double fa, double fb, std::size_t ties) {
        const double diff = fa - fb;
        acc += diff * diff * (static_cast<double>(ties) / pooled);
    });
    return acc;
}

KsResult ks_two_sample(std::vector<double> a, std::vector<double> b) {
    if (a.empty() || b.empty()) throw std::invalid_argument("ks_two_sample: empty sample");
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    const double d = ks_statistic_sorted(a, b);
    const double na = static_cast<double>(a.size());
    const double nb = static_cast<double>(b.size());
    const double effective = na * nb / (na + nb);
    return {d, kolmogorov_tail(std::sqrt(effective) * d)};
}

}  // namespace expcheck
