#include <doctest.h>

#include <random>

#include "expcheck/jet.hpp"

using namespace expcheck;

namespace {

MaclaurinJet exp_jet(int order) {
    std::vector<Rational> coeffs;
    for (int k = 0; k <= order; ++k) {
        coeffs.push_back(Rational(1) / Rational(factorial_integer(static_cast<unsigned>(k))));
    }
    return MaclaurinJet(coeffs);
}

MaclaurinJet random_jet(std::mt19937_64& rng, int order) {
    std::uniform_int_distribution<int> num(-6, 6);
    std::uniform_int_distribution<int> den(1, 5);
    std::vector<Rational> coeffs;
    for (int k = 0; k <= order; ++k) coeffs.push_back(make_rational(num(rng), den(rng)));
    return MaclaurinJet(coeffs);
}

}  // namespace

TEST_CASE("jet construction and extraction") {
    MaclaurinJet jet({Rational(2), Rational(-1), make_rational(1, 2)});
    CHECK(jet.order() == 2);
    CHECK(jet.coeff(2) == make_rational(1, 2));
    CHECK(jet.derivative_at_zero(0) == Rational(2));
    CHECK(jet.derivative_at_zero(2) == Rational(1));
    CHECK_THROWS_AS(jet.coeff(3), std::out_of_range);
    CHECK_THROWS_AS(jet.derivative_at_zero(-1), std::out_of_range);
    CHECK_THROWS_AS(MaclaurinJet(std::vector<Rational>{}), std::invalid_argument);
}

TEST_CASE("jet multiplication") {
    MaclaurinJet one_plus({Rational(1), Rational(1), Rational(0)});
    MaclaurinJet one_minus({Rational(1), Rational(-1), Rational(0)});
    MaclaurinJet prod = mul(one_plus, one_minus);
    CHECK(prod.coefficients() == std::vector<Rational>{Rational(1), Rational(0), Rational(-1)});

    MaclaurinJet f = exp_jet(5);
    CHECK(mul(f, MaclaurinJet::constant(Rational(1), 5)) == f);

    MaclaurinJet doubled = mul(exp_jet(4), exp_jet(4));
    for (int k = 0; k <= 4; ++k) {
        CHECK(doubled.coeff(k) == rational_pow(Rational(2), static_cast<unsigned>(k)) /
                                      Rational(factorial_integer(static_cast<unsigned>(k))));
    }

    // Mixed orders truncate to the smaller operand.
    CHECK(mul(exp_jet(7), exp_jet(3)).order() == 3);
}

TEST_CASE("antiderivative") {
    MaclaurinJet x = antiderivative(MaclaurinJet::constant(Rational(1), 0));
    CHECK(x.coefficients() == std::vector<Rational>{Rational(0), Rational(1)});

    MaclaurinJet unit_exp = scale_argument(exp_jet(6), Rational(-1));
    MaclaurinJet cdf = antiderivative(unit_exp);
    CHECK(cdf.order() == 7);
    CHECK(cdf.derivative_at_zero(0) == Rational(0));
    CHECK(cdf.derivative_at_zero(1) == Rational(1));
    CHECK(cdf.derivative_at_zero(2) == Rational(-1));

    MaclaurinJet any({make_rational(3, 7), Rational(2)});
    CHECK(antiderivative(any).derivative_at_zero(1) == any.coeff(0));
}

TEST_CASE("argument scaling") {
    MaclaurinJet f = exp_jet(5);
    CHECK(scale_argument(f, Rational(1)) == f);

    MaclaurinJet unit_exp = scale_argument(f, Rational(-1));
    MaclaurinJet squeezed = scale_argument(unit_exp, Rational(2));
    for (int k = 0; k <= 5; ++k) {
        CHECK(squeezed.coeff(k) == rational_pow(Rational(-2), static_cast<unsigned>(k)) /
                                       Rational(factorial_integer(static_cast<unsigned>(k))));
    }

    MaclaurinJet frozen = scale_argument(f, Rational(0));
    CHECK(frozen.coeff(0) == f.coeff(0));
    for (int k = 1; k <= 5; ++k) CHECK(frozen.coeff(k) == Rational(0));
}

TEST_CASE("convolution") {
    MaclaurinJet one = MaclaurinJet::constant(Rational(1), 4);
    MaclaurinJet z = convolve(one, one);
    CHECK(z.coeff(0) == Rational(0));
    CHECK(z.coeff(1) == Rational(1));
    for (int k = 2; k <= 5; ++k) CHECK(z.coeff(k) == Rational(0));

    MaclaurinJet ramp({Rational(0), Rational(1), Rational(0), Rational(0)});
    MaclaurinJet half_square = convolve(one.truncated(3), ramp);
    CHECK(half_square.coeff(2) == make_rational(1, 2));
    CHECK(half_square.coeff(1) == Rational(0));
    CHECK(half_square.coeff(3) == Rational(0));

    MaclaurinJet zero = MaclaurinJet::zero(4);
    CHECK(convolve(zero, exp_jet(4)) == MaclaurinJet::zero(5));
}

TEST_CASE("convolution matches the commuted product") {
    std::mt19937_64 rng(555001);
    for (int round = 0; round < 20; ++round) {
        MaclaurinJet a = random_jet(rng, 8);
        MaclaurinJet b = random_jet(rng, 8);
        CHECK(convolve(a, b) == convolve(b, a));
    }
}

TEST_CASE("higher-order runs reproduce lower-order coefficients") {
    std::mt19937_64 rng(771239);
    for (int round = 0; round < 20; ++round) {
        MaclaurinJet a = random_jet(rng, 12);
        MaclaurinJet b = random_jet(rng, 12);
        MaclaurinJet prod_full = mul(a, b);
        MaclaurinJet prod_small = mul(a.truncated(8), b.truncated(8));
        CHECK(prod_full.truncated(8) == prod_small);

        MaclaurinJet conv_full = convolve(a, b);
        MaclaurinJet conv_small = convolve(a.truncated(8), b.truncated(8));
        CHECK(conv_full.truncated(9) == conv_small);
    }
}

TEST_CASE("truncation and coefficient replacement guard their bounds") {
    MaclaurinJet f = exp_jet(4);
    CHECK(f.truncated(4) == f);
    CHECK_THROWS_AS(f.truncated(5), std::out_of_range);
    CHECK_THROWS_AS(f.truncated(-1), std::out_of_range);

    MaclaurinJet bumped = f.with_coefficient(2, f.coeff(2) + 1);
    CHECK(bumped.coeff(2) == f.coeff(2) + 1);
    CHECK(bumped.coeff(3) == f.coeff(3));
    CHECK_THROWS_AS(f.with_coefficient(9, Rational(1)), std::out_of_range);
}
