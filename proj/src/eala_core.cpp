#include "eala/eala_core.hpp"

#include "eala/exceptions.hpp"

#include <sstream>

namespace eala {

Theta::Theta(Scalar e2) : e2_(std::move(e2)) {
    if (e2_.radical_part().is_zero())
        throw ConfigError("theta((0,1)) must be irrational (nonzero radical part), got " + e2_.str());
}

LieTorusElement derive(const LieTorusElement& x, const Theta& theta) {
    Matrix2 out;
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) {
            TorusElement entry;
            for (const auto& [d, coeff] : x.matrix().at(r, c).terms())
                entry += TorusElement::monomial(d, theta(d) * coeff);
            out.at(r, c) = std::move(entry);
        }
    return LieTorusElement(std::move(out));
}

Scalar cocycle(const LieTorusElement& x, const LieTorusElement& y, const Theta& theta) {
    return form_L(derive(x, theta), y);
}

EalaElement& EalaElement::operator+=(const EalaElement& o) {
    l += o.l;
    c_coeff += o.c_coeff;
    d_coeff += o.d_coeff;
    return *this;
}

EalaElement& EalaElement::operator-=(const EalaElement& o) {
    l -= o.l;
    c_coeff -= o.c_coeff;
    d_coeff -= o.d_coeff;
    return *this;
}

std::string EalaElement::str() const {
    std::ostringstream os;
    os << l.str() << " (+) " << c_coeff.str() << "*c (+) " << d_coeff.str() << "*d";
    return os.str();
}

EalaElement EalaElement::parse(std::string_view text) {
    size_t first = text.find(" (+) ");
    if (first == std::string_view::npos) throw ParseError("expected ' (+) ' in '" + std::string(text) + "'");
    size_t second = text.find(" (+) ", first + 5);
    if (second == std::string_view::npos) throw ParseError("expected second ' (+) ' in '" + std::string(text) + "'");

    std::string_view c_part = text.substr(first + 5, second - first - 5);
    std::string_view d_part = text.substr(second + 5);
    if (c_part.size() < 2 || c_part.substr(c_part.size() - 2) != "*c")
        throw ParseError("expected '*c' in '" + std::string(text) + "'");
    if (d_part.size() < 2 || d_part.substr(d_part.size() - 2) != "*d")
        throw ParseError("expected '*d' in '" + std::string(text) + "'");

    return {LieTorusElement::parse(text.substr(0, first)),
            Scalar::parse(c_part.substr(0, c_part.size() - 2)),
            Scalar::parse(d_part.substr(0, d_part.size() - 2))};
}

EalaElement bracket_E(const EalaElement& x, const EalaElement& y, const Theta& theta) {
    LieTorusElement l = bracket(x.l, y.l);
    if (!x.d_coeff.is_zero()) l += x.d_coeff * derive(y.l, theta);
    if (!y.d_coeff.is_zero()) l -= y.d_coeff * derive(x.l, theta);
    return {std::move(l), cocycle(x.l, y.l, theta), Scalar(0)};
}

Scalar form_E(const EalaElement& x, const EalaElement& y) {
    return form_L(x.l, y.l) + x.c_coeff * y.d_coeff + y.c_coeff * x.d_coeff;
}

StandardMad::StandardMad(Scalar generator_scale) : scale_(std::move(generator_scale)) {
    if (scale_.is_zero()) throw ConfigError("the MAD generator scale must be nonzero");
}

Matrix2 StandardMad::generator() const {
    return Matrix2::diag(TorusElement::monomial({0, 0}, scale_), TorusElement::monomial({0, 0}, -scale_));
}

namespace {

// z must equal lambda * x for a scalar lambda; recovers lambda from the
// first term of x and verifies the multiple exactly.
Scalar eigenvalue_of(const LieTorusElement& z, const LieTorusElement& x, const char* what) {
    if (x.is_zero()) throw NotAnEigenvector("zero vector");
    if (z.is_zero()) return Scalar(0);
    Scalar lambda;
    for (int r = 0; r < 2 && lambda.is_zero(); ++r)
        for (int c = 0; c < 2 && lambda.is_zero(); ++c) {
            const auto& terms = x.matrix().at(r, c).terms();
            if (!terms.empty())
                lambda = z.matrix().at(r, c).component(terms.begin()->first) * terms.begin()->second.inverse();
        }
    if (!(lambda * x == z)) throw NotAnEigenvector(std::string(what) + " of " + x.str());
    return lambda;
}

}  // namespace

std::pair<Scalar, Scalar> simultaneous_eigenvalues(const LieTorusElement& x, const StandardMad& mad,
                                                   const Theta& theta) {
    LieTorusElement ad_p = bracket(LieTorusElement(mad.generator()), x);
    Scalar alpha = eigenvalue_of(ad_p, x, "[P, x] is not a multiple");
    Scalar beta = eigenvalue_of(derive(x, theta), x, "derive(x) is not a multiple");
    return {std::move(alpha), std::move(beta)};
}

}  // namespace eala
