#include "eala/sampling.hpp"

#include <vector>

namespace eala {

namespace {

const std::vector<Scalar>& palette() {
    static const std::vector<Scalar> values = {
        Scalar(1),
        Scalar(-1),
        Scalar(2),
        Scalar(-2),
        Scalar(3),
        Scalar(Rational(1, 2)),
        Scalar(Rational(-1, 2)),
        Scalar(Rational(1, 3)),
        Scalar::rt2(),
        -Scalar::rt2(),
        Scalar(1) + Scalar::rt2(),
        Scalar(Rational(1), Rational(-1, 2)),
    };
    return values;
}

}  // namespace

const Scalar& SampleGen::coeff() { return palette()[next(palette().size())]; }

Degree SampleGen::degree(int box) {
    const std::uint64_t width = 2 * box + 1;
    return {static_cast<std::int32_t>(next(width)) - box, static_cast<std::int32_t>(next(width)) - box};
}

Rational SampleGen::rational() {
    long num = static_cast<long>(next(21)) - 10;
    long den = static_cast<long>(next(6)) + 1;
    return Rational(num, den);
}

TorusElement SampleGen::torus_element(int box, int max_terms) {
    TorusElement out;
    std::uint64_t terms = 1 + next(max_terms);
    for (std::uint64_t n = 0; n < terms; ++n) out += TorusElement::monomial(degree(box), coeff());
    return out;
}

TorusElement SampleGen::torus_monomial(int box) { return TorusElement::monomial(degree(box), coeff()); }

Matrix2 SampleGen::matrix(int box, int max_terms) {
    Matrix2 out;
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) out.at(r, c) = torus_element(box, max_terms);
    return out;
}

LieTorusElement SampleGen::lie_element(int box, int max_terms) {
    LieTorusElement out;
    std::uint64_t terms = 1 + next(max_terms);
    for (std::uint64_t n = 0; n < terms; ++n) {
        GradedIndex idx{static_cast<int>(next(3)) * 2 - 2, degree(box)};
        std::vector<LieTorusElement> basis = slice_basis(idx);
        out += coeff() * basis[next(basis.size())];
    }
    return out;
}

EalaElement SampleGen::eala_element(int box) {
    LieTorusElement l = lie_element(box);
    Scalar c = coeff();
    Scalar d = coeff();
    // Zero coefficients must occur too; the palette is nonzero by design.
    if (next(4) == 0) c = Scalar(0);
    if (next(4) == 0) d = Scalar(0);
    return {std::move(l), std::move(c), std::move(d)};
}

}  // namespace eala
