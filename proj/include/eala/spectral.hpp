#pragma once

#include "eala/eala_core.hpp"
#include "eala/report.hpp"
#include "eala/section.hpp"

namespace eala {

/// The involution S = 2p - I built from the splitting of m: acts as +1 on
/// the image of the section and as -1 on W = ker m. Construction enforces
/// S^2 = I and the sl2 trace criterion.
class SElement {
public:
    explicit SElement(Matrix2 s);  // NotAnInvolution / NotInSl2

    const LieTorusElement& element() const { return s_; }
    const Matrix2& matrix() const { return s_.matrix(); }

    LieTorusElement ad(const LieTorusElement& x) const { return bracket(s_, x); }

    EalaElement as_eala() const { return EalaElement::from_l(s_); }

private:
    LieTorusElement s_;
};

SElement build_S(const Matrix2& projection);  // NotIdempotent first

/// (ad s)(ad s - 2)(ad s + 2) applied to x, for any s — the quantity that
/// vanishes identically when ad s has spectrum in {0, ±2}.
Matrix2 cubic_residual(const Matrix2& s, const Matrix2& x);

inline bool cubic_annihilates(const SElement& s, const LieTorusElement& x) {
    return cubic_residual(s.matrix(), x.matrix()).is_zero();
}

/// Sweeps every graded basis element of sl2(Q) with degree in [-box, box]^2
/// through the cubic identity; failure is reported with the first witness,
/// not thrown.
VerificationReport ad_cubic_check(const SElement& s, int box);

/// Lagrange projector onto the ad-S eigenspace of lambda in {0, 2, -2}:
///   P_0 = id - (ad S)^2/4,  P_{±2} = ((ad S)^2 ± 2 ad S)/8.
/// Demands the cubic identity on x (CubicFailed otherwise) and verifies the
/// eigen-relation on the result.
LieTorusElement eigenprojection(const SElement& s, int lambda, const LieTorusElement& x);

/// Raw variant used to exercise the CubicFailed path with operators that are
/// not involutions.
Matrix2 eigenprojection_raw(const Matrix2& s, int lambda, const Matrix2& x);

/// y = [S, d_theta] = -derive(S) with its eigenspace decomposition
/// y = y0 + y2 + ym2.
struct YDecomposition {
    LieTorusElement y;
    LieTorusElement y0;
    LieTorusElement y2;
    LieTorusElement ym2;
};

/// Computes and decomposes y, asserting y0 = 0 exactly (Y0NonZero otherwise).
YDecomposition compute_y(const SElement& s, const Theta& theta = Theta());

/// d' = d_theta - y2/2 + ym2/2, packaged as an EALA element with d_coeff 1.
/// Construction asserts [S, d'] = 0 in all three components
/// (DPrimeBracketNonZero otherwise).
struct DPrime {
    EalaElement element;
};

DPrime build_d_prime(const SElement& s, const YDecomposition& yd, const Theta& theta = Theta());

/// All pairwise brackets among S, c and d' vanish: the computable abelian
/// seed of a MAD containing S.
VerificationReport abelian_seed_check(const SElement& s, const DPrime& dp, const Theta& theta = Theta());

/// sigma(S, [l_a, l_b]) = (a + b) sigma(l_a, l_b) on seeded random pairs of
/// ad-S eigenvectors obtained by projecting graded basis elements in the box.
VerificationReport lemma1_cocycle_check(const SElement& s, int box, long pairs, std::uint64_t seed,
                                        const Theta& theta = Theta());

}  // namespace eala
