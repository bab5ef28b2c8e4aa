#pragma once

#include "eala/lie_torus.hpp"

#include <string>
#include <string_view>
#include <utility>

namespace eala {

/// The linear functional theta on the degree lattice that drives the degree
/// derivation: theta((1,0)) = 1 is fixed, theta((0,1)) must be irrational
/// (nonzero radical part) and defaults to rt2.
class Theta {
public:
    Theta() : e2_(Scalar::rt2()) {}
    explicit Theta(Scalar e2);  // ConfigError when the radical part is zero

    Scalar value_e1() const { return Scalar(1); }
    const Scalar& value_e2() const { return e2_; }

    Scalar operator()(Degree d) const { return Scalar(d.a) + Scalar(d.b) * e2_; }

private:
    Scalar e2_;
};

/// Degree derivation: scales each degree-lambda component by theta(lambda).
LieTorusElement derive(const LieTorusElement& x, const Theta& theta = Theta());

/// The central 2-cocycle evaluated at the degree derivation:
/// sigma(x, y)(d_theta) = (derive(x) | y). The center C and the derivation
/// line D are one-dimensional, so this scalar determines the functional.
Scalar cocycle(const LieTorusElement& x, const LieTorusElement& y, const Theta& theta = Theta());

/// Element of E = L + C + D: an sl2(Q) part, the coefficient of the basis
/// central element c = d_theta^*, and the coefficient of d_theta.
struct EalaElement {
    LieTorusElement l;
    Scalar c_coeff;
    Scalar d_coeff;

    static EalaElement from_l(LieTorusElement l) { return {std::move(l), Scalar(0), Scalar(0)}; }
    static EalaElement central() { return {{}, Scalar(1), Scalar(0)}; }
    static EalaElement derivation() { return {{}, Scalar(0), Scalar(1)}; }

    bool is_zero() const { return l.is_zero() && c_coeff.is_zero() && d_coeff.is_zero(); }

    EalaElement operator-() const { return {-l, -c_coeff, -d_coeff}; }
    EalaElement& operator+=(const EalaElement& o);
    EalaElement& operator-=(const EalaElement& o);
    friend EalaElement operator+(EalaElement x, const EalaElement& y) { return x += y; }
    friend EalaElement operator-(EalaElement x, const EalaElement& y) { return x -= y; }
    friend EalaElement operator*(const Scalar& s, const EalaElement& x) {
        return {s * x.l, s * x.c_coeff, s * x.d_coeff};
    }

    friend bool operator==(const EalaElement&, const EalaElement&) = default;

    /// "<matrix> (+) <scalar>*c (+) <scalar>*d"
    std::string str() const;
    static EalaElement parse(std::string_view text);
};

/// [l1+c1+p1, l2+c2+p2] = ([l1,l2] + p1(l2) - p2(l1)) + sigma(l1,l2);
/// the derivation component of any bracket is zero, so E_c = L + C absorbs
/// every bracket.
EalaElement bracket_E(const EalaElement& x, const EalaElement& y, const Theta& theta = Theta());

/// (l1,l2) + c1(p2) + c2(p1).
Scalar form_E(const EalaElement& x, const EalaElement& y);

/// The standard maximal abelian diagonalizable subalgebra k*P + C + D with
/// P = a*diag(1,-1), a a nonzero scalar.
class StandardMad {
public:
    explicit StandardMad(Scalar generator_scale = Scalar(1));  // ConfigError on zero

    const Scalar& generator_scale() const { return scale_; }
    Matrix2 generator() const;

private:
    Scalar scale_;
};

/// For a graded basis element x, returns (alpha, beta) with [P, x] = alpha*x
/// and derive(x) = beta*x; throws NotAnEigenvector when either bracket is
/// not a scalar multiple of x.
std::pair<Scalar, Scalar> simultaneous_eigenvalues(const LieTorusElement& x, const StandardMad& mad,
                                                   const Theta& theta = Theta());

}  // namespace eala
