#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "apofamily/rational.hpp"

using namespace apofamily;

TEST_CASE("canonical form: lowest terms, positive denominator, zero is 0/1") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(3, -6) == Rational(-1, 2));
    CHECK(Rational(3, -6).denominator() == 2);
    CHECK(Rational(0, 7).to_string() == "0");
    CHECK(Rational(0, 7).denominator() == 1);
    CHECK_THROWS(Rational(1, 0));
}

TEST_CASE("arithmetic is exact") {
    Rational a(1, 3), b(1, 6);
    CHECK(a + b == Rational(1, 2));
    CHECK(a - b == Rational(1, 6));
    CHECK(a * b == Rational(1, 18));
    CHECK(a / b == Rational(2));
    CHECK(-a == Rational(-1, 3));
    CHECK_THROWS(a / Rational(0));
}

TEST_CASE("pow handles negative exponents") {
    CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
    CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
    CHECK(Rational(5).pow(0) == Rational(1));
    CHECK_THROWS(Rational(0).pow(-1));
}

TEST_CASE("serialization round trip") {
    CHECK(Rational(-7, 3).to_string() == "-7/3");
    CHECK(Rational(5).to_string() == "5");
    CHECK(Rational::parse("-7/3") == Rational(-7, 3));
    CHECK(Rational::parse("12") == Rational(12));
    CHECK(Rational::parse("1e-3") == Rational(1, 1000));
    CHECK(Rational::parse("2e2") == Rational(200));
    CHECK_THROWS(Rational::parse(""));
}

TEST_CASE("factorial, binomial, pochhammer") {
    CHECK(factorial(6) == 720);
    CHECK(binomial(7, 3) == 35);
    CHECK(binomial(3, 5) == 0);
    CHECK(pochhammer(Rational(3), 4) == Rational(3 * 4 * 5 * 6));
    CHECK(pochhammer(Rational(1, 2), 2) == Rational(3, 4));
    CHECK(pochhammer(Rational(5), 0) == Rational(1));
    // (x)_{-j} = 1/(x-j)_j
    CHECK(pochhammer(Rational(5), -2) == Rational(1) / (Rational(3) * Rational(4)));
}

TEST_CASE("ordering") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(-1, 3));
    CHECK(Rational(7, 5).abs() == Rational(7, 5));
    CHECK(Rational(-7, 5).abs() == Rational(7, 5));
}
