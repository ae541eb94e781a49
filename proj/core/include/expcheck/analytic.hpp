#pragma once

#include <stdexcept>
#include <vector>

#include "expcheck/difference_kernel.hpp"
#include "expcheck/jet.hpp"

namespace expcheck {

// A density series whose derivatives at zero follow the exponential pattern
// f^(k)(0) = (f1/f0)^{k-1} * f1. The unit-exponential instance is (1, -1),
// giving f^(k)(0) = (-1)^k.
struct DensityJetModel {
    Rational f0;
    Rational f1;

    DensityJetModel(Rational f0_, Rational f1_);

    /// f^(k)(0) under the pattern rule.
    Rational derivative(unsigned k) const;

    /// The series truncated at the given order.
    MaclaurinJet jet(int order) const;
};

/// F^m * f with F = antiderivative(f); the m = 0 power yields f itself. Up to
/// a constant this is the density of the maximum of m+1 independent draws,
/// and its derivatives at zero drive every equation side below.
MaclaurinJet cdf_power_density(unsigned m, const MaclaurinJet& f);

/// Closed form for the (m+d)-th derivative at zero of cdf_power_density(m, .)
/// under the exponential pattern: (f1/f0)^d f0^{m+1} power_difference(m, m+d, m+1)
/// for d >= 0, and 0 for -m <= d < 0. Requires m >= 1 and d >= -m.
Rational pattern_g_derivative(unsigned m, int d, const Rational& f0, const Rational& f1);

/// f^(0)(0)..f^(up_to)(0) extracted from a jet.
std::vector<Rational> derivative_table(const MaclaurinJet& f, int up_to);

/// Derivatives at zero of cdf_power_density(m, f), orders 0..up_to, computed
/// from a plain derivative table by iterated Leibniz expansion. Needs f
/// derivatives only up to order up_to - m; shorter tables throw.
std::vector<Rational> g_derivative_table(unsigned m, const std::vector<Rational>& f_derivatives,
                                         int up_to);

/// The nested convolution of scaled densities
///   K(y) = int ... int f(n x_1) f((n-1) x_2) ... f((n-s+1) y_s) dx,
/// built by the recursion convolve(scale_argument(f, n), kernel(n-1, s-1))
/// with base case scale_argument(f, n-s+1). Requires 1 <= s <= n-1. The first
/// s-1 derivatives at zero vanish.
MaclaurinJet kernel_jet(int n, int s, const MaclaurinJet& f);

/// Closed multi-sum for the m-th derivative of kernel_jet(n, s, .) at zero,
/// evaluated from a derivative table. Requires s >= 2 and m >= s-1; it agrees
/// exactly with jet extraction for any density series.
Rational kernel_derivative_closed(int n, int s, int m, const std::vector<Rational>& f_derivatives);

struct JetPair {
    MaclaurinJet lhs;
    MaclaurinJet rhs;
};

/// Both sides of the density-level identity equivalent to
///   max(n-s draws) + sum_{j=n-s+1}^{n} X_j / j  =d=  max(n draws):
/// left  = convolve(cdf_power_density(n-s-1, f), kernel_jet(n, s, f)),
/// right = f times the s-fold antidifferentiate-and-multiply chain seeded
/// with cdf_power_density(n-s-1, f). Both are truncated at `order`; they agree
/// coefficientwise exactly when f follows the exponential pattern.
JetPair density_equation_sides(int n, int s, const MaclaurinJet& f, int order);

struct ValuePair {
    Rational lhs;
    Rational rhs;
};

/// The scalar identity obtained by extracting derivative n+t from both sides
/// of density_equation_sides: coefficient-weighted sums over all admissible
/// multi-indices, scale_power_coeff on the left, binomial_product_coeff on
/// the right. Derivative tables must cover the orders the context requires.
ValuePair derivative_equation_sides(const IndexContext& ctx,
                                    const std::vector<Rational>& f_derivatives,
                                    const std::vector<Rational>& g_derivatives);

class UnderdeterminedError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct InductionStep {
    Rational derivative;           // the solved f^(t+1)(0)
    Rational unknown_coefficient;  // multiplier of the unknown; must be nonzero
};

/// Replays the induction: for t = 1..steps treats the derivative equation as
/// linear in the single unknown f^(t+1)(0) given all lower-order derivatives,
/// solves, and appends. Returns f^(2)(0)..f^(steps+1)(0) with the unknown's
/// coefficient at each step; throws UnderdeterminedError if a coefficient is
/// exactly zero. For valid inputs the solved sequence reproduces the pattern
/// f^(k)(0) = (f1/f0)^{k-1} f1.
std::vector<InductionStep> induction_solve(int n, int s, const Rational& f0, const Rational& f1,
                                           int steps);

struct DensityReconstruction {
    Rational rate;    // -f1/f0
    bool normalized;  // true iff f0 equals the rate, i.e. f1 = -f0^2
};

/// Identifies the exponential density f0 * exp((f1/f0) x) determined by the
/// pattern. Requires f0 > 0 and f1 < 0.
DensityReconstruction reconstruct_density(const Rational& f0, const Rational& f1);

}  // namespace expcheck
