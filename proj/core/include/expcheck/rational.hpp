#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace expcheck {

// All identity checks run over exact rationals: no rounding anywhere.
// cpp_rational keeps values in lowest terms with a positive denominator.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Builds num/den with the sign normalized onto the numerator.
inline Rational make_rational(long long num, long long den = 1) {
    if (den == 0) throw std::domain_error("make_rational: zero denominator");
    return Rational(Integer(num)) / Rational(Integer(den));
}

/// base^exp with the 0^0 = 1 convention used by the finite-difference sums.
inline Rational rational_pow(const Rational& base, unsigned exp) {
    Rational result(1);
    Rational b = base;
    while (exp != 0) {
        if (exp & 1u) result *= b;
        exp >>= 1u;
        if (exp != 0) b *= b;
    }
    return result;
}

inline Integer factorial_integer(unsigned n) {
    Integer result(1);
    for (unsigned k = 2; k <= n; ++k) result *= k;
    return result;
}

inline Rational factorial_rational(unsigned n) {
    return Rational(factorial_integer(n));
}

inline double to_double(const Rational& value) {
    return value.convert_to<double>();
}

/// "p/q", or "p" when the value is an integer.
inline std::string to_string(const Rational& value) {
    return value.str();
}

}  // namespace expcheck
