#include "expcheck/difference_kernel.hpp"

#include <cstddef>
#include <stdexcept>

namespace expcheck {

Rational power_difference(unsigned n, unsigned i, const Rational& x) {
    Rational acc(0);
    Integer binom(1);  // C(n, j), updated multiplicatively
    for (unsigned j = 0; j <= n; ++j) {
        Rational term = Rational(binom) * rational_pow(x - j, i);
        if (j % 2 == 0) {
            acc += term;
        } else {
            acc -= term;
        }
        if (j < n) {
            binom *= (n - j);
            binom /= (j + 1);
        }
    }
    return acc;
}

std::vector<Rational> difference_row(unsigned n, const Rational& x) {
    std::vector<Rational> row;
    row.reserve(n + 1);
    for (unsigned i = 0; i <= n; ++i) {
        row.push_back(power_difference(n, i, x));
    }
    return row;
}

IdentityPair difference_identity_sides(DifferenceIdentity which, unsigned s, unsigned r) {
    if (s < 1 || r < 1) {
        throw std::domain_error("difference_identity_sides: s and r must be positive");
    }
    Rational lhs(0);
    switch (which) {
        case DifferenceIdentity::binomial_lift: {
            for (unsigned j = 0; j < r; ++j) {
                lhs += binomial(r, j) * power_difference(s - 1, j, Rational(s));
            }
            return {lhs, power_difference(s, r, Rational(s + 1))};
        }
        case DifferenceIdentity::shifted_binomial: {
            for (unsigned j = 0; j < r; ++j) {
                lhs += binomial(r, j + 1) * power_difference(s, j, Rational(s + 1));
            }
            break;
        }
        case DifferenceIdentity::geometric_sum: {
            for (unsigned j = 0; j < r; ++j) {
                lhs += rational_pow(Rational(s + 2), r - 1 - j) *
                       power_difference(s, j, Rational(s + 1));
            }
            break;
        }
    }
    Rational rhs = power_difference(s + 1, r, Rational(s + 2)) / Rational(s + 1);
    return {lhs, rhs};
}

IndexContext::IndexContext(int n_, int s_, int t_) : n(n_), s(s_), t(t_) {
    if (n < 2) throw std::invalid_argument("IndexContext: n must be at least 2");
    if (s < 1 || s > n - 1) throw std::invalid_argument("IndexContext: need 1 <= s <= n-1");
    if (t < 1) throw std::invalid_argument("IndexContext: t must be positive");
}

bool is_admissible(const IndexContext& ctx, const MultiIndex& idx) {
    if (idx.size() != static_cast<std::size_t>(ctx.s)) return false;
    int budget = ctx.r_first();
    for (int j = 0; j < ctx.s - 1; ++j) {
        const int i = idx[static_cast<std::size_t>(j)];
        if (i < 0 || i > budget) return false;
        budget -= i;
    }
    const int last = idx[static_cast<std::size_t>(ctx.s - 1)];
    return last >= 0 && last <= budget - 1;
}

namespace {

// Residual budget r_s implied by the prefix; callers have checked admissibility.
int last_residual(const IndexContext& ctx, const MultiIndex& idx) {
    int budget = ctx.r_first();
    for (int j = 0; j < ctx.s - 1; ++j) budget -= idx[static_cast<std::size_t>(j)];
    return budget;
}

void require_admissible(const IndexContext& ctx, const MultiIndex& idx, const char* who) {
    if (!is_admissible(ctx, idx)) {
        throw std::domain_error(std::string(who) + ": inadmissible multi-index");
    }
}

}  // namespace

Rational scale_power_coeff(const IndexContext& ctx, const MultiIndex& idx) {
    require_admissible(ctx, idx, "scale_power_coeff");
    const int r_s = last_residual(ctx, idx);
    const int i_s = idx[static_cast<std::size_t>(ctx.s - 1)];
    Rational value = rational_pow(Rational(ctx.d(ctx.s)), static_cast<unsigned>(r_s - i_s - 1));
    for (int j = 1; j < ctx.s; ++j) {
        value *= rational_pow(Rational(ctx.d(j)), static_cast<unsigned>(idx[static_cast<std::size_t>(j - 1)]));
    }
    return value;
}

Rational binomial_product_coeff(const IndexContext& ctx, const MultiIndex& idx) {
    require_admissible(ctx, idx, "binomial_product_coeff");
    const int i_s = idx[static_cast<std::size_t>(ctx.s - 1)];
    int budget = ctx.r_first();
    Rational value(1);
    for (int j = 1; j < ctx.s; ++j) {
        const int i_j = idx[static_cast<std::size_t>(j - 1)];
        value *= binomial(static_cast<unsigned>(budget + ctx.s - j), static_cast<unsigned>(i_j));
        budget -= i_j;
    }
    value *= binomial(static_cast<unsigned>(budget), static_cast<unsigned>(i_s + 1));
    return value;
}

Rational coeff_gap(const IndexContext& ctx, const MultiIndex& idx) {
    return scale_power_coeff(ctx, idx) - binomial_product_coeff(ctx, idx);
}

TripleSum coefficient_triple_sum(const IndexContext& ctx) {
    const int diff_order = ctx.n - ctx.s - 1;
    const Rational probe(ctx.n - ctx.s);

    // One difference value per possible i_s.
    std::vector<Rational> diff_values;
    diff_values.reserve(static_cast<std::size_t>(ctx.r_first()));
    for (int i = 0; i < ctx.r_first(); ++i) {
        diff_values.push_back(power_difference(static_cast<unsigned>(diff_order),
                                               static_cast<unsigned>(i), probe));
    }

    BinomialTable table(static_cast<unsigned>(ctx.r_first() + ctx.s));
    Rational lhs(0);
    Rational rhs(0);
    for_each_admissible(ctx, [&](const MultiIndex& idx, const std::vector<int>& residual) {
        const int i_s = idx[static_cast<std::size_t>(ctx.s - 1)];
        const int r_s = residual[static_cast<std::size_t>(ctx.s - 1)];
        const Rational& diff = diff_values[static_cast<std::size_t>(i_s)];

        Rational a = rational_pow(Rational(ctx.d(ctx.s)), static_cast<unsigned>(r_s - i_s - 1));
        Rational b(table(static_cast<unsigned>(r_s), static_cast<unsigned>(i_s + 1)));
        for (int j = 1; j < ctx.s; ++j) {
            const int i_j = idx[static_cast<std::size_t>(j - 1)];
            const int r_j = residual[static_cast<std::size_t>(j - 1)];
            a *= rational_pow(Rational(ctx.d(j)), static_cast<unsigned>(i_j));
            b *= Rational(table(static_cast<unsigned>(r_j + ctx.s - j), static_cast<unsigned>(i_j)));
        }
        lhs += a * diff;
        rhs += b * diff;
    });

    Rational closed = power_difference(static_cast<unsigned>(ctx.n - 1),
                                       static_cast<unsigned>(ctx.n + ctx.t), Rational(ctx.n)) /
                      falling_factorial(ctx.n - 1, static_cast<unsigned>(ctx.s));
    return {lhs, rhs, closed};
}

}  // namespace expcheck
