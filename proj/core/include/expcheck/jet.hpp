#pragma once

#include <vector>

#include "expcheck/rational.hpp"

namespace expcheck {

// Truncated Maclaurin series with exact rational coefficients. Coefficient k
// stores f^(k)(0)/k!, so derivative extraction multiplies by k!. Every
// operation truncates to the largest order it can fill exactly; requests past
// the stored order throw instead of padding with zeros.
class MaclaurinJet {
public:
    /// Coefficients a_0..a_N; the order is N = coeffs.size() - 1.
    explicit MaclaurinJet(std::vector<Rational> coeffs);

    static MaclaurinJet zero(int order);
    static MaclaurinJet constant(const Rational& value, int order);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }

    /// a_k; throws std::out_of_range for k > order().
    const Rational& coeff(int k) const;

    /// k! * a_k; throws std::out_of_range for k > order().
    Rational derivative_at_zero(int k) const;

    /// Copy limited to the first new_order+1 coefficients (new_order <= order).
    MaclaurinJet truncated(int new_order) const;

    /// Copy with a_k replaced; used to build perturbed witness series.
    MaclaurinJet with_coefficient(int k, const Rational& value) const;

    const std::vector<Rational>& coefficients() const { return coeffs_; }

    bool operator==(const MaclaurinJet&) const = default;

private:
    std::vector<Rational> coeffs_;
};

/// Cauchy product, truncated to the smaller operand order.
MaclaurinJet mul(const MaclaurinJet& a, const MaclaurinJet& b);

/// m-fold product; m = 0 gives the constant-one jet at the operand's order.
MaclaurinJet pow(const MaclaurinJet& a, unsigned m);

/// F with F(0) = 0 and F' = f; the order grows by one.
MaclaurinJet antiderivative(const MaclaurinJet& f);

/// x -> f(d*x): coefficient k picks up the factor d^k.
MaclaurinJet scale_argument(const MaclaurinJet& f, const Rational& d);

/// A(z) = integral_0^z B(x) C(z-x) dx. Coefficient p+q+1 of A receives
/// b_p c_q p! q! / (p+q+1)!; the order is min(order B, order C) + 1.
MaclaurinJet convolve(const MaclaurinJet& b, const MaclaurinJet& c);

}  // namespace expcheck
