#pragma once

#include <vector>

namespace expcheck {

struct KsResult {
    double statistic;
    double p_value;
};

/// Asymptotic Kolmogorov survival function Q(lambda) = 2 sum (-1)^{k-1} e^{-2 k^2 lambda^2},
/// clamped to (0, 1].
double kolmogorov_tail(double lambda);

/// sup |ecdf_a - ecdf_b| over the pooled points; inputs must be sorted.
double ks_statistic_sorted(const std::vector<double>& a, const std::vector<double>& b);

/// Cramer-von-Mises-style distance: sum over pooled points of
/// (ecdf_a - ecdf_b)^2 times the pooled-ecdf increment; inputs must be sorted.
double cvm_statistic_sorted(const std::vector<double>& a, const std::vector<double>& b);

/// Two-sample KS test: the statistic by merge scan, the p-value from the
/// asymptotic tail at sqrt(n_a n_b / (n_a + n_b)) * D.
KsResult ks_two_sample(std::vector<double> a, std::vector<double> b);

}  // namespace expcheck
