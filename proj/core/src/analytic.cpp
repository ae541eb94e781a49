#include "expcheck/analytic.hpp"

#include <cstddef>
#include <string>

namespace expcheck {

namespace {

std::size_t as_index(int k) { return static_cast<std::size_t>(k); }

}  // namespace

DensityJetModel::DensityJetModel(Rational f0_, Rational f1_) : f0(std::move(f0_)), f1(std::move(f1_)) {
    if (f0 <= 0) throw std::invalid_argument("DensityJetModel: f0 must be positive");
}

Rational DensityJetModel::derivative(unsigned k) const {
    if (k == 0) return f0;
    return rational_pow(f1 / f0, k - 1) * f1;
}

MaclaurinJet DensityJetModel::jet(int order) const {
    if (order < 0) throw std::invalid_argument("DensityJetModel: negative order");
    std::vector<Rational> coeffs(as_index(order) + 1);
    for (int k = 0; k <= order; ++k) {
        coeffs[as_index(k)] = derivative(static_cast<unsigned>(k)) /
                              Rational(factorial_integer(static_cast<unsigned>(k)));
    }
    return MaclaurinJet(std::move(coeffs));
}

MaclaurinJet cdf_power_density(unsigned m, const MaclaurinJet& f) {
    if (m == 0) return f;
    return mul(pow(antiderivative(f), m), f);
}

Rational pattern_g_derivative(unsigned m, int d, const Rational& f0, const Rational& f1) {
    if (m < 1) throw std::domain_error("pattern_g_derivative: m must be positive");
    if (f0 <= 0) throw std::domain_error("pattern_g_derivative: f0 must be positive");
    if (d < -static_cast<int>(m)) {
        throw std::domain_error("pattern_g_derivative: d below -m");
    }
    if (d < 0) return Rational(0);
    return rational_pow(f1 / f0, static_cast<unsigned>(d)) * rational_pow(f0, m + 1) *
           power_difference(m, m + static_cast<unsigned>(d), Rational(m + 1));
}

std::vector<Rational> derivative_table(const MaclaurinJet& f, int up_to) {
    std::vector<Rational> table;
    table.reserve(as_index(up_to) + 1);
    for (int k = 0; k <= up_to; ++k) table.push_back(f.derivative_at_zero(k));
    return table;
}

std::vector<Rational> g_derivative_table(unsigned m, const std::vector<Rational>& f_derivatives,
                                         int up_to) {
    if (up_to < 0) throw std::invalid_argument("g_derivative_table: negative order");
    if (up_to < static_cast<int>(m)) {
        // Every derivative below order m vanishes: each cdf factor absorbs one.
        return std::vector<Rational>(as_index(up_to) + 1, Rational(0));
    }
    const int base_max = up_to - static_cast<int>(m);
    if (static_cast<int>(f_derivatives.size()) <= base_max) {
        throw std::out_of_range("g_derivative_table: derivative table too short (needs order " +
                                std::to_string(base_max) + ")");
    }
    std::vector<Rational> cur(f_derivatives.begin(), f_derivatives.begin() + base_max + 1);
    if (m == 0) return cur;

    BinomialTable binom(static_cast<unsigned>(up_to));
    for (unsigned stage = 1; stage <= m; ++stage) {
        const int hi = base_max + static_cast<int>(stage);
        std::vector<Rational> next(as_index(hi) + 1, Rational(0));
        for (int i = static_cast<int>(stage); i <= hi; ++i) {
            Rational acc(0);
            // The previous stage vanishes below order stage-1, which caps l
            // and keeps every f-derivative lookup within base_max.
            const int l_max = i - static_cast<int>(stage) + 1;
            for (int l = 1; l <= l_max; ++l) {
                acc += Rational(binom(static_cast<unsigned>(i), static_cast<unsigned>(l))) *
                       f_derivatives[as_index(l - 1)] * cur[as_index(i - l)];
            }
            next[as_index(i)] = acc;
        }
        cur = std::move(next);
    }
    return cur;
}

MaclaurinJet kernel_jet(int n, int s, const MaclaurinJet& f) {
    if (n < 2 || s < 1 || s > n - 1) {
        throw std::invalid_argument("kernel_jet: need n >= 2 and 1 <= s <= n-1");
    }
    MaclaurinJet acc = scale_argument(f, Rational(n - s + 1));
    for (int level = n - s + 2; level <= n; ++level) {
        acc = convolve(scale_argument(f, Rational(level)), acc);
    }
    return acc;
}

Rational kernel_derivative_closed(int n, int s, int m, const std::vector<Rational>& f_derivatives) {
    if (s < 2) throw std::domain_error("kernel_derivative_closed: s must be at least 2");
    if (s > n - 1) throw std::domain_error("kernel_derivative_closed: need s <= n-1");
    if (m < s - 1) throw std::domain_error("kernel_derivative_closed: m below s-1");
    const int budget = m - s + 1;
    if (static_cast<int>(f_derivatives.size()) <= budget) {
        throw std::out_of_range("kernel_derivative_closed: derivative table too short");
    }

    Rational total(0);
    // Nested sums over i_1..i_{s-1} with shrinking budgets; the last factor
    // takes whatever budget remains.
    auto walk = [&](auto&& self, int pos, int remaining, const Rational& partial) -> void {
        if (pos == s) {
            total += partial * rational_pow(Rational(n - s + 1), static_cast<unsigned>(remaining)) *
                     f_derivatives[as_index(remaining)];
            return;
        }
        const Rational scale(n - pos + 1);
        for (int i = 0; i <= remaining; ++i) {
            self(self, pos + 1, remaining - i,
                 partial * rational_pow(scale, static_cast<unsigned>(i)) * f_derivatives[as_index(i)]);
        }
    };
    walk(walk, 1, budget, Rational(1));
    return total;
}

JetPair density_equation_sides(int n, int s, const MaclaurinJet& f, int order) {
    if (n < 2 || s < 1 || s > n - 1) {
        throw std::invalid_argument("density_equation_sides: need n >= 2 and 1 <= s <= n-1");
    }
    if (order < 0 || f.order() < order) {
        throw std::invalid_argument("density_equation_sides: series order too small for request");
    }
    const unsigned tail = static_cast<unsigned>(n - s - 1);
    const MaclaurinJet block = cdf_power_density(tail, f);

    MaclaurinJet lhs = convolve(block, kernel_jet(n, s, f));

    MaclaurinJet rhs = block;
    for (int round = 0; round < s; ++round) {
        rhs = mul(f, antiderivative(rhs));
    }
    return {lhs.truncated(order), rhs.truncated(order)};
}

ValuePair derivative_equation_sides(const IndexContext& ctx,
                                    const std::vector<Rational>& f_derivatives,
                                    const std::vector<Rational>& g_derivatives) {
    const int r1 = ctx.r_first();
    const int f_needed = ctx.s >= 2 ? r1 : r1 - 1;
    if (static_cast<int>(f_derivatives.size()) <= f_needed) {
        throw std::out_of_range("derivative_equation_sides: f table needs order " +
                                std::to_string(f_needed));
    }
    if (static_cast<int>(g_derivatives.size()) <= r1 - 1) {
        throw std::out_of_range("derivative_equation_sides: g table needs order " +
                                std::to_string(r1 - 1));
    }

    BinomialTable table(static_cast<unsigned>(r1 + ctx.s));
    Rational lhs(0);
    Rational rhs(0);
    for_each_admissible(ctx, [&](const MultiIndex& idx, const std::vector<int>& residual) {
        const int i_s = idx[as_index(ctx.s - 1)];
        const int r_s = residual[as_index(ctx.s - 1)];

        Rational common = f_derivatives[as_index(r_s - i_s - 1)] * g_derivatives[as_index(i_s)];
        Rational a = rational_pow(Rational(ctx.d(ctx.s)), static_cast<unsigned>(r_s - i_s - 1));
        Rational b(table(static_cast<unsigned>(r_s), static_cast<unsigned>(i_s + 1)));
        for (int j = 1; j < ctx.s; ++j) {
            const int i_j = idx[as_index(j - 1)];
            const int r_j = residual[as_index(j - 1)];
            common *= f_derivatives[as_index(i_j)];
            a *= rational_pow(Rational(ctx.d(j)), static_cast<unsigned>(i_j));
            b *= Rational(table(static_cast<unsigned>(r_j + ctx.s - j), static_cast<unsigned>(i_j)));
        }
        lhs += a * common;
        rhs += b * common;
    });
    return {lhs, rhs};
}

std::vector<InductionStep> induction_solve(int n, int s, const Rational& f0, const Rational& f1,
                                           int steps) {
    if (f0 <= 0) throw std::invalid_argument("induction_solve: f0 must be positive");
    if (f1 == 0) throw std::invalid_argument("induction_solve: f1 must be nonzero");
    if (steps < 1) throw std::invalid_argument("induction_solve: steps must be positive");
    IndexContext(n, s, 1);  // validates the (n, s) frame

    const int tail = n - s - 1;  // order of the cdf power in the equation
    std::vector<Rational> f_der = {f0, f1};
    std::vector<InductionStep> out;
    out.reserve(as_index(steps));

    for (int t = 1; t <= steps; ++t) {
        IndexContext ctx(n, s, t);

        // Derivatives of the cdf-power block from what is known so far. The
        // top order n-s+t is never touched: its only occurrence carries a
        // vanishing coefficient gap.
        const int g_max = n - s + t - 1;
        const std::vector<Rational> g_der = g_derivative_table(static_cast<unsigned>(tail), f_der, g_max);

        // Multiplier of the unknown f^(t+1)(0): the all-zero prefix and the
        // single-(t+1) prefixes, all at i_s = tail.
        Rational gap_sum(0);
        {
            MultiIndex base(as_index(s), 0);
            base[as_index(s - 1)] = tail;
            gap_sum += coeff_gap(ctx, base);
            for (int j = 0; j + 1 < s; ++j) {
                MultiIndex bumped(as_index(s), 0);
                bumped[as_index(j)] = t + 1;
                bumped[as_index(s - 1)] = tail;
                gap_sum += coeff_gap(ctx, bumped);
            }
        }
        const Rational unknown_coeff =
            gap_sum * rational_pow(f0, static_cast<unsigned>(s - 1)) * g_der.at(as_index(tail));
        if (unknown_coeff == 0) {
            throw UnderdeterminedError("induction_solve: unknown coefficient vanished at n=" +
                                       std::to_string(n) + " s=" + std::to_string(s) +
                                       " t=" + std::to_string(t));
        }

        Rational residual(0);
        for_each_admissible(ctx, [&](const MultiIndex& idx, const std::vector<int>& res) {
            const int i_s = idx[as_index(s - 1)];
            if (i_s < tail) return;  // cdf-power derivative vanishes there

            // Skip the unknown-bearing terms collected into unknown_coeff.
            if (i_s == tail) {
                int nonzero = 0;
                bool bumped_once = true;
                for (int j = 0; j + 1 < s; ++j) {
                    const int v = idx[as_index(j)];
                    if (v != 0) {
                        ++nonzero;
                        if (v != t + 1) bumped_once = false;
                    }
                }
                if (nonzero == 0 || (nonzero == 1 && bumped_once)) return;
            }

            const Rational gap = coeff_gap(ctx, idx);
            if (gap == 0) return;

            const int r_s = res[as_index(s - 1)];
            Rational term = gap * f_der.at(as_index(r_s - i_s - 1)) * g_der.at(as_index(i_s));
            for (int j = 0; j + 1 < s; ++j) {
                term *= f_der.at(as_index(idx[as_index(j)]));
            }
            residual += term;
        });

        Rational solved = -residual / unknown_coeff;
        f_der.push_back(solved);
        out.push_back({std::move(solved), unknown_coeff});
    }
    return out;
}

DensityReconstruction reconstruct_density(const Rational& f0, const Rational& f1) {
    if (f0 <= 0) throw std::domain_error("reconstruct_density: f0 must be positive");
    if (f1 >= 0) throw std::domain_error("reconstruct_density: f1 must be negative");
    Rational rate = -f1 / f0;
    return {rate, f0 == rate};
}

}  // namespace expcheck
