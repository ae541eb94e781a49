#pragma once

#include <vector>

#include "expcheck/rational.hpp"

namespace expcheck {

/// C(n, k) by the multiplicative formula; 0 for k > n.
Integer binomial_integer(unsigned n, unsigned k);

inline Rational binomial(unsigned n, unsigned k) {
    return Rational(binomial_integer(n, k));
}

// Pascal-triangle cache for the multi-index enumerations. Immutable after
// construction, so concurrent lookups are safe.
class BinomialTable {
public:
    explicit BinomialTable(unsigned max_n);

    /// C(n, k); zero outside the triangle. Requires n <= max_n.
    const Integer& operator()(unsigned n, unsigned k) const;

    unsigned max_n() const { return static_cast<unsigned>(rows_.size()) - 1; }

private:
    std::vector<std::vector<Integer>> rows_;
    Integer zero_;
};

/// n(n-1)...(n-s+1), the product of s descending factors. Requires s >= 1.
Rational falling_factorial(long long n, unsigned s);

}  // namespace expcheck
