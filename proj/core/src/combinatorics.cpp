#include "expcheck/combinatorics.hpp"

#include <stdexcept>

namespace expcheck {

Integer binomial_integer(unsigned n, unsigned k) {
    if (k > n) return Integer(0);
    if (k > n - k) k = n - k;
    Integer result(1);
    for (unsigned j = 0; j < k; ++j) {
        result *= (n - j);
        result /= (j + 1);  // exact: a prefix product of a binomial row
    }
    return result;
}

BinomialTable::BinomialTable(unsigned max_n) : zero_(0) {
    rows_.resize(max_n + 1);
    for (unsigned n = 0; n <= max_n; ++n) {
        rows_[n].resize(n + 1);
        rows_[n][0] = rows_[n][n] = Integer(1);
        for (unsigned k = 1; k < n; ++k) {
            rows_[n][k] = rows_[n - 1][k - 1] + rows_[n - 1][k];
        }
    }
}

const Integer& BinomialTable::operator()(unsigned n, unsigned k) const {
    if (n >= rows_.size()) throw std::out_of_range("BinomialTable: row beyond cache");
    if (k > n) return zero_;
    return rows_[n][k];
}

Rational falling_factorial(long long n, unsigned s) {
    if (s < 1) throw std::domain_error("falling_factorial: s must be positive");
    Integer result(1);
    for (unsigned j = 0; j < s; ++j) {
        result *= Integer(n - static_cast<long long>(j));
    }
    return Rational(result);
}

}  // namespace expcheck
