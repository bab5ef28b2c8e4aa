#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eala/exceptions.hpp"
#include "eala/sampling.hpp"
#include "eala/scalar.hpp"

using namespace eala;

TEST_CASE("rational canonical form") {
    Rational r = Rational(6) / Rational(-4);
    CHECK(numerator(r) == -3);
    CHECK(denominator(r) == 2);
    CHECK(rational_str(r) == "-3/2");
    CHECK(rational_str(Rational(0)) == "0");
    CHECK(parse_rational("-3/2") == r);
    CHECK(parse_rational("7") == Rational(7));
    CHECK_THROWS_AS(parse_rational("3/"), ParseError);
    CHECK_THROWS_AS(parse_rational("x"), ParseError);
}

TEST_CASE("addition") {
    CHECK(Scalar(1) + Scalar::rt2() == Scalar(Rational(1), Rational(1)));
    Scalar x(Rational(5, 7), Rational(-2, 3));
    CHECK(x + Scalar(0) == x);
    CHECK(Scalar(Rational(1, 2), Rational(1, 3)) + Scalar(Rational(1, 2), Rational(-1, 3)) == Scalar(1));
}

TEST_CASE("multiplication") {
    CHECK(Scalar::rt2() * Scalar::rt2() == Scalar(2));
    Scalar x(Rational(5, 7), Rational(-2, 3));
    CHECK(x * Scalar(1) == x);
    Scalar one_plus = Scalar(1) + Scalar::rt2();
    Scalar one_minus = Scalar(1) - Scalar::rt2();
    CHECK(one_plus * one_minus == Scalar(-1));
}

TEST_CASE("inverse") {
    CHECK(Scalar(2).inverse() == Scalar(Rational(1, 2)));
    CHECK(Scalar::rt2().inverse() == Scalar(Rational(0), Rational(1, 2)));
    Scalar one_plus = Scalar(1) + Scalar::rt2();
    CHECK(one_plus.inverse() == Scalar(-1) + Scalar::rt2());
    CHECK(one_plus * one_plus.inverse() == Scalar(1));
    CHECK_THROWS_AS(Scalar(0).inverse(), DivisionByZero);
}

TEST_CASE("field axioms on random triples") {
    SampleGen gen(42);
    for (int n = 0; n < 500; ++n) {
        Scalar x = gen.coeff() * Scalar(gen.rational()) + gen.coeff();
        Scalar y = gen.coeff() * Scalar(gen.rational()) + gen.coeff();
        Scalar z = gen.coeff() * Scalar(gen.rational()) + gen.coeff();
        CHECK((x + y) + z == x + (y + z));
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * y == y * x);
        CHECK(x * (y + z) == x * y + x * z);
        if (!x.is_zero()) CHECK(x * x.inverse() == Scalar(1));
    }
}

TEST_CASE("norm vanishes only at zero") {
    // a^2 - 2 b^2 = 0 over Q forces a = b = 0; the guard behind inverse().
    SampleGen gen(7);
    for (int n = 0; n < 2000; ++n) {
        Rational a = gen.rational(), b = gen.rational();
        if (a.is_zero() && b.is_zero()) continue;
        CHECK(!Rational(a * a - 2 * b * b).is_zero());
    }
}

TEST_CASE("canonical text round trip") {
    CHECK(Scalar(Rational(1, 2)).str() == "1/2");
    CHECK(Scalar(Rational(1, 2), Rational(-2, 3)).str() == "(1/2 + -2/3*rt2)");
    CHECK(Scalar::parse("1/2") == Scalar(Rational(1, 2)));
    CHECK(Scalar::parse("(1/2 + -2/3*rt2)") == Scalar(Rational(1, 2), Rational(-2, 3)));
    CHECK(Scalar::parse("(0 + 1*rt2)") == Scalar::rt2());
    CHECK_THROWS_AS(Scalar::parse("(1 + 2)"), ParseError);
    CHECK_THROWS_AS(Scalar::parse("1/2 extra"), ParseError);

    SampleGen gen(11);
    for (int n = 0; n < 500; ++n) {
        Scalar x(gen.rational(), gen.rational());
        CHECK(Scalar::parse(x.str()) == x);
    }
}
