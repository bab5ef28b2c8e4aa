#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eala/exceptions.hpp"
#include "eala/sampling.hpp"
#include "eala/torus.hpp"

#include <cstdlib>

using namespace eala;

namespace {

// Independent product oracle: multiplies i^a j^b by i^c j^d by bubbling the
// c letters of i (or i^-1) leftward one j-swap at a time, flipping the sign
// per swap; never consults the closed-form parity rule.
std::pair<int, Degree> word_product(Degree x, Degree y) {
    int sign = 1;
    for (long ii = 0; ii < std::abs(static_cast<long>(y.a)); ++ii)
        for (long jj = 0; jj < std::abs(static_cast<long>(x.b)); ++jj) sign = -sign;
    return {sign, x + y};
}

TorusElement mono(int a, int b) { return TorusElement::monomial({a, b}); }

}  // namespace

TEST_CASE("defining relations") {
    TorusElement i = TorusElement::i_gen(), j = TorusElement::j_gen();
    CHECK(i * i == TorusElement::t1());
    CHECK(j * j == TorusElement::t2());
    CHECK(i * j == mono(1, 1));
    CHECK(j * i == -mono(1, 1));
    CHECK((i * j + j * i).is_zero());
    CHECK((i * j) * (i * j) == TorusElement::monomial({2, 2}, Scalar(-1)));
}

TEST_CASE("product agrees with the word-rewriting oracle") {
    for (int a = -3; a <= 3; ++a)
        for (int b = -3; b <= 3; ++b)
            for (int c = -3; c <= 3; ++c)
                for (int d = -3; d <= 3; ++d) {
                    auto [sign, deg] = word_product({a, b}, {c, d});
                    CHECK(mono(a, b) * mono(c, d) == TorusElement::monomial(deg, Scalar(sign)));
                }
}

TEST_CASE("associativity on monomials") {
    for (int a = -2; a <= 2; ++a)
        for (int b = -2; b <= 2; ++b)
            for (int c = -2; c <= 2; ++c)
                for (int d = -2; d <= 2; ++d) {
                    TorusElement x = mono(a, b), y = mono(c, d), z = mono(d, a);
                    CHECK((x * y) * z == x * (y * z));
                }
}

TEST_CASE("conjugation") {
    TorusElement i = TorusElement::i_gen(), j = TorusElement::j_gen();
    CHECK(i.conjugate() == -i);
    CHECK(TorusElement::t1().conjugate() == TorusElement::t1());
    CHECK((i * j).conjugate() == -(i * j));

    SampleGen gen(3);
    for (int n = 0; n < 300; ++n) {
        TorusElement x = gen.torus_element(3), y = gen.torus_element(3);
        CHECK((x * y).conjugate() == y.conjugate() * x.conjugate());
        CHECK(x.conjugate().conjugate() == x);
    }
}

TEST_CASE("monomial inverse") {
    TorusElement i = TorusElement::i_gen();
    CHECK(i.monomial_inverse() == mono(-1, 0));                       // t1^-1 * i
    CHECK(TorusElement::one().monomial_inverse() == TorusElement::one());
    CHECK_THROWS_AS((i + TorusElement::j_gen()).monomial_inverse(), NonInvertible);
    CHECK_THROWS_AS(TorusElement::zero().monomial_inverse(), NonInvertible);

    SampleGen gen(5);
    for (int n = 0; n < 300; ++n) {
        TorusElement x = gen.torus_monomial(4);
        CHECK(x * x.monomial_inverse() == TorusElement::one());
        CHECK(x.monomial_inverse() * x == TorusElement::one());
    }
}

TEST_CASE("components") {
    TorusElement x = TorusElement::t1() + Scalar(2) * TorusElement::i_gen();
    CHECK(x.component({2, 0}) == Scalar(1));
    CHECK(TorusElement::t1().component({0, 0}) == Scalar(0));
    CHECK(TorusElement::zero().component({5, -5}) == Scalar(0));

    CHECK(x.even_even_part() == TorusElement::t1());
    CHECK((TorusElement::i_gen() * TorusElement::j_gen()).even_even_part().is_zero());
    TorusElement y = Scalar(3) * mono(2, -2);
    CHECK(y.even_even_part() == y);

    CHECK(x.degree_part({1, 0}) == Scalar(2) * TorusElement::i_gen());
}

TEST_CASE("grading of products") {
    SampleGen gen(9);
    for (int n = 0; n < 300; ++n) {
        TorusElement x = gen.torus_element(3), y = gen.torus_element(3);
        for (Degree d : (x * y).support()) {
            bool reachable = false;
            for (Degree dx : x.support())
                for (Degree dy : y.support()) reachable = reachable || (dx + dy == d);
            CHECK(reachable);
        }
    }
}

TEST_CASE("canonical text") {
    TorusElement x = Scalar(Rational(1, 2)) * mono(0, 0) - TorusElement::i_gen();
    CHECK(x.str() == "1/2 + -1*i^1*j^0");
    CHECK(TorusElement::zero().str() == "0");
    CHECK(TorusElement::parse("1/2 + -1*i^1*j^0") == x);
    CHECK(TorusElement::parse("0") == TorusElement::zero());
    CHECK(TorusElement::parse("(0 + 1*rt2)*i^-1*j^2") ==
          TorusElement::monomial({-1, 2}, Scalar::rt2()));
    CHECK_THROWS_AS(TorusElement::parse("1*i^1"), ParseError);

    SampleGen gen(13);
    for (int n = 0; n < 500; ++n) {
        TorusElement x2 = gen.torus_element(4);
        CHECK(TorusElement::parse(x2.str()) == x2);
    }
}

TEST_CASE("degree overflow is detected") {
    TorusElement big = mono(kDegreeLimit - 1, 0);
    CHECK_THROWS_AS(big * big, DegreeOverflow);
}
