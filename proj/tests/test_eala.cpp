#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eala/eala_core.hpp"
#include "eala/exceptions.hpp"
#include "eala/sampling.hpp"

using namespace eala;

namespace {

LieTorusElement e12(TorusElement q) { return LieTorusElement(Matrix2::single(0, 1, std::move(q))); }
LieTorusElement e21(TorusElement q) { return LieTorusElement(Matrix2::single(1, 0, std::move(q))); }
LieTorusElement h() {
    return LieTorusElement(Matrix2::diag(TorusElement::one(), -TorusElement::one()));
}

}  // namespace

TEST_CASE("theta") {
    Theta theta;
    CHECK(theta({1, 0}) == Scalar(1));
    CHECK(theta({0, 1}) == Scalar::rt2());
    CHECK(theta({2, -1}) == Scalar(2) - Scalar::rt2());
    CHECK_THROWS_AS(Theta(Scalar(3)), ConfigError);  // rational theta((0,1)) is ruled out
    Theta other(Scalar(1) + Scalar::rt2());
    CHECK(other({0, 1}) == Scalar(1) + Scalar::rt2());
}

TEST_CASE("degree derivation") {
    CHECK(derive(e12(TorusElement::i_gen())) == e12(TorusElement::i_gen()));
    CHECK(derive(e12(TorusElement::j_gen())) == Scalar::rt2() * e12(TorusElement::j_gen()));
    CHECK(derive(h()).is_zero());
    // Leibniz rule over random pairs.
    SampleGen gen(1);
    for (int n = 0; n < 200; ++n) {
        LieTorusElement x = gen.lie_element(3), y = gen.lie_element(3);
        CHECK(derive(bracket(x, y)) == bracket(derive(x), y) + bracket(x, derive(y)));
    }
}

TEST_CASE("cocycle values") {
    // The (1,0)-degree pairing partner of E12(i) is E21(t1^-1 i) = E21(i^-1).
    CHECK(cocycle(e12(TorusElement::i_gen()), e21(TorusElement::i_gen().monomial_inverse())) == Scalar(1));
    CHECK(cocycle(e12(TorusElement::i_gen()), e21(TorusElement::i_gen())).is_zero());
    SampleGen gen(2);
    for (int n = 0; n < 200; ++n) {
        LieTorusElement x = gen.lie_element(3), y = gen.lie_element(3);
        CHECK(cocycle(x, x).is_zero());
        CHECK(cocycle(h(), y).is_zero());
        CHECK(cocycle(x, y) == -cocycle(y, x));
    }
}

TEST_CASE("cocycle cyclic identity") {
    SampleGen gen(3);
    for (int n = 0; n < 200; ++n) {
        LieTorusElement x = gen.lie_element(3), y = gen.lie_element(3), z = gen.lie_element(3);
        Scalar cyc = cocycle(bracket(x, y), z) + cocycle(bracket(y, z), x) + cocycle(bracket(z, x), y);
        CHECK(cyc.is_zero());
    }
}

TEST_CASE("bracket_E") {
    EalaElement e = EalaElement::from_l(e12(TorusElement::i_gen()));
    EalaElement d = EalaElement::derivation();
    CHECK(bracket_E(d, e).l == e12(TorusElement::i_gen()));
    CHECK(bracket_E(d, e).d_coeff.is_zero());

    SampleGen gen(4);
    for (int n = 0; n < 200; ++n) {
        EalaElement x = gen.eala_element(3), y = gen.eala_element(3);
        CHECK(bracket_E(EalaElement::central(), y).is_zero());
        CHECK(bracket_E(x, x).is_zero());
        CHECK(bracket_E(x, y) == -bracket_E(y, x));
        CHECK(bracket_E(x, y).d_coeff.is_zero());
    }
}

TEST_CASE("bracket_E jacobi") {
    SampleGen gen(5);
    for (int n = 0; n < 150; ++n) {
        EalaElement x = gen.eala_element(2), y = gen.eala_element(2), z = gen.eala_element(2);
        EalaElement cyc = bracket_E(x, bracket_E(y, z)) + bracket_E(y, bracket_E(z, x)) +
                          bracket_E(z, bracket_E(x, y));
        CHECK(cyc.is_zero());
    }
}

TEST_CASE("form_E") {
    EalaElement c = EalaElement::central(), d = EalaElement::derivation();
    CHECK(form_E(c, d) == Scalar(1));
    CHECK(form_E(c, c).is_zero());
    CHECK(form_E(d, d).is_zero());
    SampleGen gen(6);
    for (int n = 0; n < 200; ++n) {
        LieTorusElement x = gen.lie_element(3), y = gen.lie_element(3);
        CHECK(form_E(EalaElement::from_l(x), EalaElement::from_l(y)) == form_L(x, y));
        EalaElement ex = gen.eala_element(3), ey = gen.eala_element(3), ez = gen.eala_element(3);
        CHECK(form_E(ex, ey) == form_E(ey, ex));
        CHECK(form_E(bracket_E(ex, ey), ez) == form_E(ex, bracket_E(ey, ez)));
    }
}

TEST_CASE("standard MAD eigenvalues") {
    StandardMad mad(Scalar(3));
    Theta theta;
    TorusElement m = TorusElement::monomial({2, -1});

    auto [a1, b1] = simultaneous_eigenvalues(e12(m), mad, theta);
    CHECK(a1 == Scalar(6));
    CHECK(b1 == Scalar(2) - Scalar::rt2());

    auto [a2, b2] = simultaneous_eigenvalues(LieTorusElement(Matrix2::diag(m, -m)), mad, theta);
    CHECK(a2.is_zero());
    CHECK(b2 == theta({2, -1}));

    auto [a3, b3] = simultaneous_eigenvalues(e12(TorusElement::one()), mad, theta);
    CHECK(a3 == Scalar(6));
    CHECK(b3.is_zero());

    CHECK_THROWS_AS(simultaneous_eigenvalues(e12(TorusElement::one()) + e21(TorusElement::one()), mad, theta),
                    NotAnEigenvector);
    CHECK_THROWS_AS(StandardMad(Scalar(0)), ConfigError);
}

TEST_CASE("eala element text round trip") {
    SampleGen gen(7);
    for (int n = 0; n < 200; ++n) {
        EalaElement x = gen.eala_element(3);
        CHECK(EalaElement::parse(x.str()) == x);
    }
    CHECK_THROWS_AS(EalaElement::parse("[[0, 0], [0, 0]]"), ParseError);
}
