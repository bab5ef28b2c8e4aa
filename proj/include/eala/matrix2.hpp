#pragma once

#include "eala/torus.hpp"

#include <array>
#include <iosfwd>
#include <string>
#include <string_view>

namespace eala {

/// 2x2 matrix over the quaternion torus: an element of gl2(Q) = End_Q(V)
/// for V = Q + Q a free right Q-module, endomorphisms acting by left
/// multiplication on column vectors. Entry products never commute; all
/// arithmetic preserves factor order.
class Matrix2 {
public:
    Matrix2() = default;

    static Matrix2 zero() { return {}; }
    static Matrix2 identity();
    /// Single-entry matrix E_rc(q); rows and columns are 0-based.
    static Matrix2 single(int r, int c, TorusElement q);
    static Matrix2 diag(TorusElement upper, TorusElement lower);

    const TorusElement& at(int r, int c) const { return e_[index(r, c)]; }
    TorusElement& at(int r, int c) { return e_[index(r, c)]; }

    bool is_zero() const;
    TorusElement trace() const { return at(0, 0) + at(1, 1); }

    Matrix2 operator-() const;
    Matrix2& operator+=(const Matrix2& o);
    Matrix2& operator-=(const Matrix2& o);
    friend Matrix2 operator+(Matrix2 x, const Matrix2& y) { return x += y; }
    friend Matrix2 operator-(Matrix2 x, const Matrix2& y) { return x -= y; }
    friend Matrix2 operator*(const Matrix2& x, const Matrix2& y);
    friend Matrix2 operator*(const Scalar& c, const Matrix2& x);
    friend Matrix2 operator*(const Matrix2& x, const Scalar& c) { return c * x; }

    friend bool operator==(const Matrix2&, const Matrix2&) = default;

    /// "[[x11, x12], [x21, x22]]" with torus-element canonical entries.
    std::string str() const;
    static Matrix2 parse(std::string_view text);

    friend std::ostream& operator<<(std::ostream& os, const Matrix2& x);

private:
    static int index(int r, int c) { return r * 2 + c; }
    std::array<TorusElement, 4> e_;
};

inline Matrix2 bracket(const Matrix2& x, const Matrix2& y) { return x * y - y * x; }

/// Exact membership criterion for sl2(Q) = [gl2(Q), gl2(Q)]: the trace must
/// have vanishing (even, even) part, because [Q, Q] is precisely the span of
/// the non-(even, even) monomials. The commutator-span oracle in
/// sl2_oracle.hpp validates this equivalence independently.
inline bool is_in_sl2(const Matrix2& x) { return x.trace().even_even_part().is_zero(); }

/// Element of the Lie torus sl2(Q); construction enforces the trace
/// criterion, so a value of this type is always a genuine sl2 element.
class LieTorusElement {
public:
    LieTorusElement() = default;
    explicit LieTorusElement(Matrix2 m);  // throws NotInSl2

    const Matrix2& matrix() const { return m_; }
    bool is_zero() const { return m_.is_zero(); }

    LieTorusElement operator-() const { return LieTorusElement(-m_, unchecked{}); }
    LieTorusElement& operator+=(const LieTorusElement& o) { m_ += o.m_; return *this; }
    LieTorusElement& operator-=(const LieTorusElement& o) { m_ -= o.m_; return *this; }
    friend LieTorusElement operator+(LieTorusElement x, const LieTorusElement& y) { return x += y; }
    friend LieTorusElement operator-(LieTorusElement x, const LieTorusElement& y) { return x -= y; }
    friend LieTorusElement operator*(const Scalar& c, const LieTorusElement& x) {
        return LieTorusElement(c * x.m_, unchecked{});
    }

    friend bool operator==(const LieTorusElement&, const LieTorusElement&) = default;

    /// sl2 is closed under the bracket, so no revalidation is needed.
    friend LieTorusElement bracket(const LieTorusElement& x, const LieTorusElement& y) {
        return LieTorusElement(bracket(x.m_, y.m_), unchecked{});
    }

    std::string str() const { return m_.str(); }
    static LieTorusElement parse(std::string_view text) { return LieTorusElement(Matrix2::parse(text)); }

private:
    struct unchecked {};
    LieTorusElement(Matrix2 m, unchecked) : m_(std::move(m)) {}

    Matrix2 m_;

    friend class SElement;
};

}  // namespace eala
