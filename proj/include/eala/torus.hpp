#pragma once

#include "eala/scalar.hpp"

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace eala {

/// Exponent pair (a, b) of the monomial i^a*j^b. Exponents are bounded
/// machine integers; arithmetic past the bound throws DegreeOverflow rather
/// than wrapping, since every downstream check relies on exact degrees.
struct Degree {
    std::int32_t a = 0;
    std::int32_t b = 0;

    friend auto operator<=>(const Degree&, const Degree&) = default;

    bool both_even() const { return a % 2 == 0 && b % 2 == 0; }
    bool is_zero() const { return a == 0 && b == 0; }
};

inline constexpr std::int32_t kDegreeLimit = 1 << 24;

Degree operator+(Degree x, Degree y);
Degree operator-(Degree x, Degree y);
inline Degree operator-(Degree x) { return Degree{static_cast<std::int32_t>(-x.a), static_cast<std::int32_t>(-x.b)}; }

std::ostream& operator<<(std::ostream& os, Degree d);

/// Element of the quaternion torus Q = (t1, t2) over k[t1^±1, t2^±1]:
/// a finitely supported map from Z^2 degrees to scalars in the basis
/// i^a*j^b, subject to i^2 = t1, j^2 = t2, ij = -ji. The Laurent ring R
/// is the (even, even) graded part via t1 = i^2, t2 = j^2; there is no
/// separate type for it.
class TorusElement {
public:
    TorusElement() = default;

    static TorusElement zero() { return {}; }
    static TorusElement one() { return monomial({0, 0}); }
    static TorusElement monomial(Degree d, Scalar coeff = Scalar(1));
    static TorusElement i_gen() { return monomial({1, 0}); }
    static TorusElement j_gen() { return monomial({0, 1}); }
    static TorusElement t1() { return monomial({2, 0}); }
    static TorusElement t2() { return monomial({0, 2}); }

    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }
    std::size_t term_count() const { return terms_.size(); }

    /// Coefficient at d; zero when absent.
    Scalar component(Degree d) const;
    /// Restriction of the term map to degrees with both exponents even.
    TorusElement even_even_part() const;
    /// Restriction to the single degree d.
    TorusElement degree_part(Degree d) const;

    std::vector<Degree> support() const;
    const std::map<Degree, Scalar>& terms() const { return terms_; }

    TorusElement operator-() const;
    TorusElement& operator+=(const TorusElement& o);
    TorusElement& operator-=(const TorusElement& o);
    friend TorusElement operator+(TorusElement x, const TorusElement& y) { return x += y; }
    friend TorusElement operator-(TorusElement x, const TorusElement& y) { return x -= y; }

    /// Bilinear extension of (i^a j^b)(i^c j^d) = (-1)^(bc) i^(a+c) j^(b+d).
    friend TorusElement operator*(const TorusElement& x, const TorusElement& y);
    friend TorusElement operator*(const Scalar& c, const TorusElement& x);
    friend TorusElement operator*(const TorusElement& x, const Scalar& c) { return c * x; }

    friend bool operator==(const TorusElement&, const TorusElement&) = default;

    /// Standard involution of the quaternion algebra extended to the torus:
    /// a monomial of degree (a, b) keeps its sign iff a, b are both even.
    /// Anti-automorphism: conjugate(xy) = conjugate(y) * conjugate(x).
    TorusElement conjugate() const;

    /// Two-sided inverse of a single-term element; throws NonInvertible on
    /// zero or multi-term input.
    TorusElement monomial_inverse() const;

    /// Terms sorted lexicographically by (a, b) as "<scalar>*i^<a>*j^<b>",
    /// degree (0,0) elided to the bare scalar; zero prints "0".
    std::string str() const;
    static TorusElement parse(std::string_view text);

    friend std::ostream& operator<<(std::ostream& os, const TorusElement& x);

private:
    void add_term(Degree d, const Scalar& c);

    // Lexicographic key order doubles as the canonical serialization order.
    std::map<Degree, Scalar> terms_;
};

}  // namespace eala
