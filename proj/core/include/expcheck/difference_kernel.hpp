#pragma once

#include <vector>

#include "expcheck/combinatorics.hpp"
#include "expcheck/rational.hpp"

namespace expcheck {

/// The alternating binomial sum sum_{j=0}^{n} (-1)^j C(n,j) (x-j)^i, i.e. the
/// n-th finite difference of t -> t^i evaluated through x. For i < n it
/// vanishes identically in x, and for i = n it equals n! (Ruiz identity).
Rational power_difference(unsigned n, unsigned i, const Rational& x);

/// The row (power_difference(n, 0, x), ..., power_difference(n, n, x)).
std::vector<Rational> difference_row(unsigned n, const Rational& x);

// Three recurrences lifting differences of order s to order s+1. Both sides
// are evaluated by independent summations; callers assert exact equality.
enum class DifferenceIdentity {
    binomial_lift,     // sum_j C(r,j)   D_{s-1,j}(s)   = D_{s,r}(s+1)
    shifted_binomial,  // sum_j C(r,j+1) D_{s,j}(s+1)   = D_{s+1,r}(s+2)/(s+1)
    geometric_sum,     // sum_j (s+2)^{r-1-j} D_{s,j}(s+1) = same right side
};

struct IdentityPair {
    Rational lhs;
    Rational rhs;
};

IdentityPair difference_identity_sides(DifferenceIdentity which, unsigned s, unsigned r);

// The (n, s, t) index frame behind the coefficient families. The scale
// factors d_j = n-j+1 shrink with position; the residual budget r_j is what
// remains of n-s+t+1 after the prefix i_1..i_{j-1} has been spent.
struct IndexContext {
    int n;
    int s;
    int t;

    IndexContext(int n, int s, int t);

    int d(int j) const { return n - j + 1; }
    int r_first() const { return n - s + t + 1; }
};

// A multi-index (i_1, ..., i_s). Admissible when 0 <= i_j <= r_j for j < s
// and 0 <= i_s <= r_s - 1, so the exponent r_s - i_s - 1 stays nonnegative.
using MultiIndex = std::vector<int>;

bool is_admissible(const IndexContext& ctx, const MultiIndex& idx);

/// Walks every admissible multi-index in lexicographic order, passing the
/// index together with the residual budgets (r_1, ..., r_s) it was built under.
template <typename Fn>
void for_each_admissible(const IndexContext& ctx, Fn&& fn) {
    MultiIndex idx(static_cast<std::size_t>(ctx.s), 0);
    std::vector<int> residual(static_cast<std::size_t>(ctx.s), 0);
    auto walk = [&](auto&& self, int pos, int budget) -> void {
        residual[static_cast<std::size_t>(pos)] = budget;
        if (pos == ctx.s - 1) {
            for (int i = 0; i < budget; ++i) {
                idx[static_cast<std::size_t>(pos)] = i;
                fn(static_cast<const MultiIndex&>(idx),
                   static_cast<const std::vector<int>&>(residual));
            }
        } else {
            for (int i = 0; i <= budget; ++i) {
                idx[static_cast<std::size_t>(pos)] = i;
                self(self, pos + 1, budget - i);
            }
        }
    };
    walk(walk, 0, ctx.r_first());
}

/// d_s^{r_s - i_s - 1} * prod_{j<s} d_j^{i_j}. Rejects inadmissible indices.
Rational scale_power_coeff(const IndexContext& ctx, const MultiIndex& idx);

/// C(r_s, i_s + 1) * prod_{j<s} C(r_j + s - j, i_j). Rejects inadmissible indices.
Rational binomial_product_coeff(const IndexContext& ctx, const MultiIndex& idx);

/// scale_power_coeff minus binomial_product_coeff.
Rational coeff_gap(const IndexContext& ctx, const MultiIndex& idx);

// Both coefficient-weighted difference sums plus the closed form
// power_difference(n-1, n+t, n) / (n-1)(n-2)...(n-s); the three values are
// produced by unrelated code paths and must agree exactly.
struct TripleSum {
    Rational lhs;
    Rational rhs;
    Rational closed;
};

TripleSum coefficient_triple_sum(const IndexContext& ctx);

}  // namespace expcheck
