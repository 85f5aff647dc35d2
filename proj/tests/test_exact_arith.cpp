#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>
#include <random>
#include <string>

#include "qstirling/bigint.hpp"
#include "qstirling/errors.hpp"
#include "qstirling/laurent.hpp"
#include "qstirling/power_series.hpp"
#include "qstirling/rational.hpp"
#include "test_util.hpp"

using namespace qstirling;
using qstirling::test::rng;

namespace {

std::string random_numeral(int max_digits) {
    std::uniform_int_distribution<int> len(1, max_digits);
    std::uniform_int_distribution<int> digit(0, 9);
    std::uniform_int_distribution<int> first(1, 9);
    std::uniform_int_distribution<int> sign(0, 1);
    const int n = len(rng());
    std::string s = sign(rng()) ? "-" : "";
    s += static_cast<char>('0' + first(rng()));
    for (int i = 1; i < n; ++i) s += static_cast<char>('0' + digit(rng()));
    return s;
}

} // namespace

TEST_CASE("BigInt construction and printing") {
    CHECK(BigInt().to_string() == "0");
    CHECK(BigInt(-1).to_string() == "-1");
    CHECK(BigInt(1000000000LL).to_string() == "1000000000");
    CHECK(BigInt("000123").to_string() == "123");
    CHECK(BigInt("-0").to_string() == "0");
    CHECK(BigInt("1267650600228229401496703205376").to_string() ==
          "1267650600228229401496703205376");
    CHECK_THROWS_AS(BigInt("12x4"), std::invalid_argument);
    CHECK_THROWS_AS(BigInt(""), std::invalid_argument);
}

TEST_CASE("BigInt arithmetic") {
    CHECK(BigInt(10) + BigInt(3) == BigInt(13));
    CHECK(BigInt(10) - BigInt(13) == BigInt(-3));
    CHECK(BigInt(-7) * BigInt(6) == BigInt(-42));
    CHECK(pow(BigInt(2), 100).to_string() == "1267650600228229401496703205376");
    CHECK(factorial(30).to_string() == "265252859812191058636308480000000");
    CHECK(binomial(5, 2) == BigInt(10));
    CHECK(binomial(0, 0) == BigInt(1));
    CHECK(binomial(4, 7) == BigInt(0));
    CHECK(binomial(46, 23).to_string() == "8233430727600");

    BigInt a("123456789012345678901234567890");
    BigInt b("987654321098765432109876543210");
    CHECK((a + b).to_string() == "1111111110111111111011111111100");
    CHECK((a * b) / a == b);
    CHECK(gcd(BigInt(12), BigInt(-8)) == BigInt(4));
    CHECK(gcd(BigInt(0), BigInt(5)) == BigInt(5));
}

TEST_CASE("BigInt division identity on random operands") {
    for (int iter = 0; iter < 500; ++iter) {
        BigInt a(random_numeral(30));
        BigInt b(random_numeral(15));
        if (b.is_zero()) continue;
        BigInt q, r;
        divmod(a, b, q, r);
        CHECK(q * b + r == a);
        CHECK(abs(r) < abs(b));
        if (!r.is_zero()) CHECK(r.sgn() == a.sgn());
    }
    CHECK_THROWS_AS(BigInt(1) / BigInt(0), std::domain_error);
}

TEST_CASE("BigInt divmod agrees with built-in integers") {
    std::uniform_int_distribution<long long> dist(-1000000000000LL, 1000000000000LL);
    for (int iter = 0; iter < 500; ++iter) {
        long long x = dist(rng()), y = dist(rng());
        if (y == 0) continue;
        BigInt q, r;
        divmod(BigInt(x), BigInt(y), q, r);
        CHECK(q.to_long_long() == x / y);
        CHECK(r.to_long_long() == x % y);
    }
}

TEST_CASE("BigInt ordering and conversions") {
    CHECK(BigInt(-5) < BigInt(-3));
    CHECK(BigInt(-5) < BigInt(3));
    CHECK(BigInt("999999999999999999999") > BigInt(1));
    CHECK(BigInt(123).to_long_long() == 123);
    CHECK(BigInt("9223372036854775807").to_long_long() == 9223372036854775807LL);
    CHECK_THROWS_AS(BigInt("9223372036854775808").to_long_long(), std::overflow_error);
    CHECK(BigInt("1000000000000").to_double() == doctest::Approx(1e12));
}

TEST_CASE("Rational canonical form") {
    CHECK(Rational(6, 8) == Rational(3, 4));
    CHECK(Rational(3, -4) == Rational(-3, 4));
    CHECK(Rational(0, 7).den() == BigInt(1));
    CHECK(Rational("42").to_string() == "42");
    CHECK(Rational("-6/8").to_string() == "-3/4");
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("Rational arithmetic") {
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
    CHECK(Rational(1, 2) * Rational(1, 3) == Rational(1, 6));
    CHECK(Rational(1, 2) / Rational(1, 3) == Rational(3, 2));
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
    CHECK(pow(Rational(2, 3), 3) == Rational(8, 27));
    CHECK(pow(Rational(2, 3), -2) == Rational(9, 4));
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(abs(Rational(-3, 4)) == Rational(3, 4));
}

TEST_CASE("Rational to_double handles huge components") {
    BigInt big = pow(BigInt(10), 40);
    Rational r(big + BigInt(1), big);
    CHECK(r.to_double() == doctest::Approx(1.0));
    Rational half(BigInt(1), pow(BigInt(10), 30));
    CHECK(half.to_double() == doctest::Approx(1e-30));
}

TEST_CASE("LaurentPoly addition") {
    const LaurentPoly a({{-1, 1}, {0, 1}});      // q^-1 + 1
    const LaurentPoly b({{0, 1}, {-1, -1}});     // 1 - q^-1
    CHECK(a + b == LaurentPoly::constant(2));

    const LaurentPoly p({{1, 2}, {2, 1}});       // 2q + q^2
    CHECK(p + LaurentPoly() == p);
    CHECK(p + LaurentPoly::monomial(2) == LaurentPoly({{1, 2}, {2, 2}}));
}

TEST_CASE("LaurentPoly multiplication") {
    const LaurentPoly one_minus_q({{0, 1}, {1, -1}});
    const LaurentPoly one_plus_q({{0, 1}, {1, 1}});
    CHECK(one_minus_q * one_plus_q == LaurentPoly({{0, 1}, {2, -1}}));
    CHECK(LaurentPoly::monomial(-2) * LaurentPoly::monomial(3) == LaurentPoly::monomial(1));
    CHECK(one_plus_q * LaurentPoly({{0, 1}, {1, 1}, {2, 1}}) ==
          LaurentPoly({{0, 1}, {1, 2}, {2, 2}, {3, 1}}));
}

TEST_CASE("LaurentPoly exact division") {
    const LaurentPoly one_minus_q2({{0, 1}, {2, -1}});
    const LaurentPoly one_minus_q({{0, 1}, {1, -1}});
    const LaurentPoly one_plus_q({{0, 1}, {1, 1}});
    CHECK(exact_div(one_minus_q2, one_minus_q) == one_plus_q);
    CHECK(exact_div(LaurentPoly({{1, 2}, {2, 1}}), LaurentPoly::monomial(1)) ==
          LaurentPoly({{0, 2}, {1, 1}}));
    CHECK_THROWS_AS(exact_div(one_plus_q, one_minus_q), NonExactDivision);
    CHECK_THROWS_AS(exact_div(one_plus_q, LaurentPoly()), std::domain_error);
    CHECK(exact_div(LaurentPoly(), one_plus_q) == LaurentPoly());
}

TEST_CASE("LaurentPoly rational evaluation") {
    CHECK(LaurentPoly({{1, 2}, {2, 1}}).eval(Rational(-1)) == Rational(-1));
    CHECK(LaurentPoly({{-3, 1}, {-2, 1}}).eval(Rational(1)) == Rational(2));
    CHECK(LaurentPoly::monomial(6).eval(Rational(-1)) == Rational(1));
    CHECK(LaurentPoly::monomial(-1).eval(Rational(2)) == Rational(1, 2));
    CHECK_THROWS_AS(LaurentPoly::monomial(-1).eval(Rational(0)), ZeroAtNegativeExponent);
    CHECK(LaurentPoly({{0, 5}, {3, 7}}).eval(Rational(0)) == Rational(5));
}

TEST_CASE("LaurentPoly complex evaluation") {
    const std::complex<double> half(0.5, 0.0);
    CHECK(LaurentPoly({{0, 1}, {1, 1}}).eval(half).real() == doctest::Approx(1.5));
    const std::complex<double> i(0.0, 1.0);
    auto v = LaurentPoly::monomial(2).eval(i);
    CHECK(v.real() == doctest::Approx(-1.0));
    CHECK(v.imag() == doctest::Approx(0.0));
    CHECK(LaurentPoly().eval(std::complex<double>(3.7, -2.0)) == std::complex<double>(0.0, 0.0));
}

TEST_CASE("LaurentPoly ring properties on random inputs") {
    for (int iter = 0; iter < 200; ++iter) {
        const LaurentPoly a = test::random_laurent();
        const LaurentPoly b = test::random_laurent();
        const LaurentPoly c = test::random_laurent();
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
    }
}

TEST_CASE("exact_div inverts multiplication") {
    for (int iter = 0; iter < 200; ++iter) {
        const LaurentPoly a = test::random_laurent();
        const LaurentPoly b = test::random_nonzero_laurent();
        CHECK(exact_div(a * b, b) == a);
    }
}

TEST_CASE("evaluation is a ring morphism") {
    const Rational points[] = {Rational(-1), Rational(1), Rational(2, 3), Rational(-1, 2)};
    for (int iter = 0; iter < 100; ++iter) {
        const LaurentPoly a = test::random_laurent();
        const LaurentPoly b = test::random_laurent();
        for (const auto& q0 : points) {
            CHECK((a * b).eval(q0) == a.eval(q0) * b.eval(q0));
            CHECK((a + b).eval(q0) == a.eval(q0) + b.eval(q0));
        }
    }
}

TEST_CASE("LaurentPoly printing") {
    CHECK(LaurentPoly().to_string() == "0");
    CHECK(LaurentPoly({{1, 2}, {2, 1}}).to_string() == "2*q+q^2");
    CHECK(LaurentPoly({{-3, -2}, {-2, -1}}).to_string() == "-2*q^-3-q^-2");
    CHECK(LaurentPoly({{0, Rational(3, 2)}}).to_string() == "3/2");
}

TEST_CASE("PowerSeries basics") {
    const PowerSeries s = PowerSeries::expm1_over_t(8);
    CHECK(s.coeff(0) == Rational(1));
    CHECK(s.coeff(1) == Rational(1, 2));
    CHECK(s.coeff(2) == Rational(1, 6));
    CHECK(pow(s, 0) == PowerSeries::one(8));
    CHECK_THROWS_AS(s.coeff(8), TruncationExceeded);
    CHECK_THROWS_AS(s * PowerSeries::one(9), std::invalid_argument);
}

TEST_CASE("PowerSeries square of (e^t-1)/t") {
    const PowerSeries sq = pow(PowerSeries::expm1_over_t(8), 2);
    CHECK(sq.coeff(0) == Rational(1));
    CHECK(sq.coeff(1) == Rational(1)); // 2 * (1/2)
}

TEST_CASE("PowerSeries inverse") {
    const PowerSeries s = PowerSeries::expm1_over_t(10);
    const PowerSeries inv = inverse(s); // t/(e^t - 1)
    CHECK(inv.coeff(0) == Rational(1));
    CHECK(inv.coeff(1) == Rational(-1, 2)); // B_1
    CHECK(inv.coeff(2) == Rational(1, 12)); // B_2 / 2!
    CHECK(s * inv == PowerSeries::one(10));

    PowerSeries no_unit(4);
    CHECK_THROWS_AS(inverse(no_unit), NonInvertibleSeries);
}

TEST_CASE("PowerSeries inverse on random unit series") {
    std::uniform_int_distribution<int> pick(-4, 4);
    for (int iter = 0; iter < 100; ++iter) {
        std::vector<Rational> coeffs(6);
        coeffs[0] = Rational(pick(rng()) >= 0 ? 1 : -1, 1 + std::abs(pick(rng())));
        for (std::size_t j = 1; j < coeffs.size(); ++j) coeffs[j] = test::random_rational();
        const PowerSeries s(6, coeffs);
        CHECK(s * inverse(s) == PowerSeries::one(6));
    }
}
