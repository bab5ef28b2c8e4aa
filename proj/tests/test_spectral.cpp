#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eala/exceptions.hpp"
#include "eala/sampling.hpp"
#include "eala/sl2_oracle.hpp"
#include "eala/spectral.hpp"

using namespace eala;

namespace {

SElement fixture_S() {
    static const SElement s = build_S(build_projection(solve_section(1)));
    return s;
}

Matrix2 p_diag() { return Matrix2::diag(TorusElement::one(), -TorusElement::one()); }

}  // namespace

TEST_CASE("build_S invariants") {
    SElement s = fixture_S();
    CHECK(s.matrix() * s.matrix() == Matrix2::identity());
    CHECK(is_in_sl2(s.matrix()));
    CHECK_THROWS_AS(build_S(Matrix2::identity() + Matrix2::identity()), NotIdempotent);
    CHECK_THROWS_AS(SElement(Matrix2::single(0, 1, TorusElement::one())), NotAnInvolution);
}

TEST_CASE("S acts as -1 on kernel columns") {
    SElement s = fixture_S();
    for (const auto& [w1, w2] : kernel_basis(2)) {
        auto [u, v] = apply_matrix(s.matrix(), w1, w2);
        CHECK(u == -w1);
        CHECK(v == -w2);
    }
}

TEST_CASE("cubic annihilation") {
    // ad P on gl2 has spectrum {0, ±2}, so the cubic kills everything.
    for (const Matrix2& x : monomial_matrices(1)) CHECK(cubic_residual(p_diag(), x).is_zero());

    SElement s = fixture_S();
    VerificationReport r = ad_cubic_check(s, 2);
    CHECK(r.status == CheckStatus::pass);
    CHECK(r.samples > 0);

    // A non-involution violates the cubic: ad E12 is nilpotent, not
    // diagonalizable with spectrum {0, ±2}.
    Matrix2 nil = Matrix2::single(0, 1, TorusElement::one());
    CHECK(!cubic_residual(nil, Matrix2::single(1, 0, TorusElement::one())).is_zero());
}

TEST_CASE("eigenprojections") {
    SElement s = fixture_S();
    SampleGen gen(1);
    for (int n = 0; n < 50; ++n) {
        LieTorusElement x = gen.lie_element(2);
        LieTorusElement p0 = eigenprojection(s, 0, x);
        LieTorusElement p2 = eigenprojection(s, 2, x);
        LieTorusElement pm2 = eigenprojection(s, -2, x);
        CHECK(p0 + p2 + pm2 == x);
        CHECK(s.ad(p0).is_zero());
        CHECK(s.ad(p2) == Scalar(2) * p2);
        CHECK(s.ad(pm2) == Scalar(-2) * pm2);
        CHECK(eigenprojection(s, 0, p0) == p0);
        CHECK(eigenprojection(s, 2, p0).is_zero());
    }
    CHECK_THROWS_AS(eigenprojection(s, 1, gen.lie_element(1)), BadRootIndex);

    // With S = P the projections recover the classical weights.
    SElement p(p_diag());
    LieTorusElement e12(Matrix2::single(0, 1, TorusElement::i_gen()));
    CHECK(eigenprojection(p, 2, e12) == e12);
    CHECK(eigenprojection(p, 0, e12).is_zero());

    // A diagonal element of central degree lands in the 0-eigenspace.
    TorusElement m = TorusElement::t1() * TorusElement::t2();
    LieTorusElement central(Matrix2::diag(m, -m));
    CHECK(s.ad(eigenprojection(s, 0, central)).is_zero());
}

TEST_CASE("cubic failure is caught") {
    Matrix2 nil = Matrix2::single(0, 1, TorusElement::one());
    CHECK_THROWS_AS(eigenprojection_raw(nil, 0, Matrix2::single(1, 0, TorusElement::one())), CubicFailed);
}

TEST_CASE("y decomposition") {
    SElement s = fixture_S();
    YDecomposition yd = compute_y(s);
    CHECK(yd.y0.is_zero());
    CHECK(yd.y0 + yd.y2 + yd.ym2 == yd.y);
    // y = [S, d_theta] = -derive(S).
    CHECK(yd.y == -derive(s.element()));
    CHECK(!yd.y.is_zero());

    // With S = P the derivation kills everything: y = 0.
    YDecomposition trivial = compute_y(SElement(p_diag()));
    CHECK(trivial.y.is_zero());
    CHECK(trivial.y2.is_zero());
    CHECK(trivial.ym2.is_zero());
}

TEST_CASE("d_prime commutes with S") {
    SElement s = fixture_S();
    YDecomposition yd = compute_y(s);
    DPrime dp = build_d_prime(s, yd);
    CHECK(dp.element.d_coeff == Scalar(1));
    CHECK(dp.element.c_coeff.is_zero());
    CHECK(bracket_E(s.as_eala(), dp.element).is_zero());
    // The central term of the lemma chain.
    CHECK(cocycle(s.element(), yd.ym2 - yd.y2).is_zero());

    // With S = P, d' is d_theta itself.
    SElement p(p_diag());
    DPrime dp_p = build_d_prime(p, compute_y(p));
    CHECK(dp_p.element == EalaElement::derivation());
}

TEST_CASE("abelian seed") {
    SElement s = fixture_S();
    DPrime dp = build_d_prime(s, compute_y(s));
    VerificationReport r = abelian_seed_check(s, dp);
    CHECK(r.status == CheckStatus::pass);
    CHECK(r.samples == 9);
}

TEST_CASE("lemma1 cocycle identity") {
    SElement s = fixture_S();
    VerificationReport r = lemma1_cocycle_check(s, 2, 250, 99);
    CHECK(r.status == CheckStatus::pass);
    CHECK(r.samples >= 250);

    // Hand-picked instances: alpha = 2, beta = 0 and alpha + beta = 0.
    LieTorusElement basis2(Matrix2::single(0, 1, TorusElement::i_gen()));
    LieTorusElement basis0(Matrix2::diag(TorusElement::j_gen(), TorusElement::j_gen()));
    LieTorusElement l2 = eigenprojection(s, 2, basis2);
    LieTorusElement l0 = eigenprojection(s, 0, basis0);
    LieTorusElement lm2 = eigenprojection(s, -2, basis2);
    CHECK(cocycle(s.element(), bracket(l2, l0)) == Scalar(2) * cocycle(l2, l0));
    CHECK(cocycle(s.element(), bracket(l2, lm2)).is_zero());
    CHECK(cocycle(s.element(), bracket(l0, l0)).is_zero());
}
