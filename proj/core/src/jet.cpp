#include "expcheck/jet.hpp"

#include <algorithm>
#include <cstddef>
#include <stdexcept>

namespace expcheck {

MaclaurinJet::MaclaurinJet(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("MaclaurinJet: needs at least a_0");
}

MaclaurinJet MaclaurinJet::zero(int order) {
    if (order < 0) throw std::invalid_argument("MaclaurinJet: negative order");
    return MaclaurinJet(std::vector<Rational>(static_cast<std::size_t>(order) + 1, Rational(0)));
}

MaclaurinJet MaclaurinJet::constant(const Rational& value, int order) {
    MaclaurinJet jet = zero(order);
    jet.coeffs_[0] = value;
    return jet;
}

const Rational& MaclaurinJet::coeff(int k) const {
    if (k < 0 || k > order()) {
        throw std::out_of_range("MaclaurinJet: coefficient beyond truncation order");
    }
    return coeffs_[static_cast<std::size_t>(k)];
}

Rational MaclaurinJet::derivative_at_zero(int k) const {
    return coeff(k) * Rational(factorial_integer(static_cast<unsigned>(k)));
}

MaclaurinJet MaclaurinJet::truncated(int new_order) const {
    if (new_order < 0 || new_order > order()) {
        throw std::out_of_range("MaclaurinJet: truncation beyond stored order");
    }
    return MaclaurinJet(std::vector<Rational>(coeffs_.begin(),
                                              coeffs_.begin() + new_order + 1));
}

MaclaurinJet MaclaurinJet::with_coefficient(int k, const Rational& value) const {
    if (k < 0 || k > order()) {
        throw std::out_of_range("MaclaurinJet: coefficient beyond truncation order");
    }
    std::vector<Rational> coeffs = coeffs_;
    coeffs[static_cast<std::size_t>(k)] = value;
    return MaclaurinJet(std::move(coeffs));
}

MaclaurinJet mul(const MaclaurinJet& a, const MaclaurinJet& b) {
    const int order = std::min(a.order(), b.order());
    std::vector<Rational> out(static_cast<std::size_t>(order) + 1, Rational(0));
    for (int k = 0; k <= order; ++k) {
        Rational acc(0);
        for (int p = 0; p <= k; ++p) {
            acc += a.coeff(p) * b.coeff(k - p);
        }
        out[static_cast<std::size_t>(k)] = acc;
    }
    return MaclaurinJet(std::move(out));
}

MaclaurinJet pow(const MaclaurinJet& a, unsigned m) {
    MaclaurinJet result = MaclaurinJet::constant(Rational(1), a.order());
    for (unsigned j = 0; j < m; ++j) result = mul(result, a);
    return result;
}

MaclaurinJet antiderivative(const MaclaurinJet& f) {
    std::vector<Rational> out(static_cast<std::size_t>(f.order()) + 2, Rational(0));
    for (int k = 0; k <= f.order(); ++k) {
        out[static_cast<std::size_t>(k) + 1] = f.coeff(k) / Rational(k + 1);
    }
    return MaclaurinJet(std::move(out));
}

MaclaurinJet scale_argument(const MaclaurinJet& f, const Rational& d) {
    std::vector<Rational> out(static_cast<std::size_t>(f.order()) + 1);
    Rational power(1);
    for (int k = 0; k <= f.order(); ++k) {
        out[static_cast<std::size_t>(k)] = f.coeff(k) * power;
        power *= d;
    }
    return MaclaurinJet(std::move(out));
}

MaclaurinJet convolve(const MaclaurinJet& b, const MaclaurinJet& c) {
    const int order = std::min(b.order(), c.order()) + 1;
    std::vector<Rational> fact;
    fact.reserve(static_cast<std::size_t>(order) + 1);
    for (int k = 0; k <= order; ++k) fact.emplace_back(factorial_integer(static_cast<unsigned>(k)));

    std::vector<Rational> out(static_cast<std::size_t>(order) + 1, Rational(0));
    for (int k = 1; k <= order; ++k) {
        Rational acc(0);
        for (int p = 0; p <= k - 1; ++p) {
            const int q = k - 1 - p;
            acc += b.coeff(p) * c.coeff(q) * fact[static_cast<std::size_t>(p)] *
                   fact[static_cast<std::size_t>(q)];
        }
        out[static_cast<std::size_t>(k)] = acc / fact[static_cast<std::size_t>(k)];
    }
    return MaclaurinJet(std::move(out));
}

}  // namespace expcheck
