#include "eala/spectral.hpp"

#include "eala/exceptions.hpp"

#include <random>

namespace eala {

SElement::SElement(Matrix2 s) : s_(std::move(s)) {
    if (!(s_.matrix() * s_.matrix() == Matrix2::identity())) throw NotAnInvolution();
}

SElement build_S(const Matrix2& projection) {
    if (!(projection * projection == projection)) throw NotIdempotent();
    return SElement(Scalar(2) * projection - Matrix2::identity());
}

Matrix2 cubic_residual(const Matrix2& s, const Matrix2& x) {
    Matrix2 ad1 = bracket(s, x);
    Matrix2 ad3 = bracket(s, bracket(s, ad1));
    return ad3 - Scalar(4) * ad1;
}

VerificationReport ad_cubic_check(const SElement& s, int box) {
    VerificationReport report;
    report.check_id = "spectrum.ad_cubic";
    report.box = box;
    for (const auto& [idx, el] : graded_basis(box)) {
        ++report.samples;
        if (!cubic_annihilates(s, el)) {
            report.status = CheckStatus::fail;
            report.witness = el.str();
            return report;
        }
    }
    return report;
}

Matrix2 eigenprojection_raw(const Matrix2& s, int lambda, const Matrix2& x) {
    if (lambda != 0 && lambda != 2 && lambda != -2) throw BadRootIndex(lambda);
    if (!cubic_residual(s, x).is_zero()) throw CubicFailed(x.str());
    Matrix2 ad1 = bracket(s, x);
    Matrix2 ad2 = bracket(s, ad1);
    Matrix2 projected;
    if (lambda == 0) {
        projected = x - Scalar(Rational(1, 4)) * ad2;
    } else {
        projected = Scalar(Rational(1, 8)) * (ad2 + Scalar(lambda) * ad1);
    }
    // Eigen-relation [S, P_lambda x] = lambda * P_lambda x; a consequence of
    // the cubic identity, re-verified exactly.
    if (!(bracket(s, projected) == Scalar(lambda) * projected)) throw CubicFailed(x.str());
    return projected;
}

LieTorusElement eigenprojection(const SElement& s, int lambda, const LieTorusElement& x) {
    return LieTorusElement(eigenprojection_raw(s.matrix(), lambda, x.matrix()));
}

YDecomposition compute_y(const SElement& s, const Theta& theta) {
    EalaElement y_full = bracket_E(s.as_eala(), EalaElement::derivation(), theta);
    // sigma(S, 0) = 0: the bracket with the pure derivation stays in L.
    LieTorusElement y = y_full.l;
    YDecomposition yd{y, eigenprojection(s, 0, y), eigenprojection(s, 2, y), eigenprojection(s, -2, y)};
    if (!(yd.y0 + yd.y2 + yd.ym2 == y)) throw CubicFailed(y.str());
    if (!yd.y0.is_zero()) throw Y0NonZero(yd.y0.str());
    return yd;
}

DPrime build_d_prime(const SElement& s, const YDecomposition& yd, const Theta& theta) {
    Scalar minus_half = Scalar(Rational(-1, 2));
    Scalar plus_half = Scalar(Rational(1, 2));
    EalaElement d_prime{minus_half * yd.y2 + plus_half * yd.ym2, Scalar(0), Scalar(1)};
    EalaElement commutator = bracket_E(s.as_eala(), d_prime, theta);
    if (!commutator.is_zero()) throw DPrimeBracketNonZero(commutator.str());
    return DPrime{std::move(d_prime)};
}

VerificationReport abelian_seed_check(const SElement& s, const DPrime& dp, const Theta& theta) {
    VerificationReport report;
    report.check_id = "lemmas.abelian_seed";
    const EalaElement elements[] = {s.as_eala(), EalaElement::central(), dp.element};
    for (const auto& x : elements)
        for (const auto& y : elements) {
            ++report.samples;
            EalaElement b = bracket_E(x, y, theta);
            if (!b.is_zero()) {
                report.status = CheckStatus::fail;
                report.witness = b.str();
                return report;
            }
        }
    return report;
}

VerificationReport lemma1_cocycle_check(const SElement& s, int box, long pairs, std::uint64_t seed,
                                        const Theta& theta) {
    VerificationReport report;
    report.check_id = "lemmas.lemma1_identity";
    report.box = box;
    report.seed = seed;

    struct Eigenvector {
        int alpha;
        LieTorusElement l;
    };
    std::vector<Eigenvector> eigenvectors;
    for (const auto& [idx, el] : graded_basis(box))
        for (int alpha : {0, 2, -2}) {
            LieTorusElement proj = eigenprojection(s, alpha, el);
            if (!proj.is_zero()) eigenvectors.push_back({alpha, std::move(proj)});
        }

    std::mt19937_64 eng(seed);
    for (long n = 0; n < pairs; ++n) {
        const Eigenvector& la = eigenvectors[eng() % eigenvectors.size()];
        const Eigenvector& lb = eigenvectors[eng() % eigenvectors.size()];
        ++report.samples;
        Scalar lhs = cocycle(s.element(), bracket(la.l, lb.l), theta);
        Scalar rhs = Scalar(la.alpha + lb.alpha) * cocycle(la.l, lb.l, theta);
        if (!(lhs == rhs)) {
            report.status = CheckStatus::fail;
            report.witness = bracket(la.l, lb.l).str();
            return report;
        }
    }
    return report;
}

}  // namespace eala
