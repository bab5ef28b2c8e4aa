#pragma once

#include "eala/rational.hpp"

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace eala {

/// Element of the field Q(rt2), stored as rational_part + radical_part * rt2.
/// The field is large enough to carry every coefficient this library needs
/// while keeping equality decidable; rt2 plays the one irrational degree value.
class Scalar {
public:
    Scalar() = default;
    Scalar(int n) : rat_(n) {}                 // NOLINT: implicit by design
    Scalar(long long n) : rat_(n) {}           // NOLINT
    Scalar(Integer n) : rat_(std::move(n)) {}  // NOLINT
    Scalar(Rational r) : rat_(std::move(r)) {} // NOLINT
    Scalar(Rational rational, Rational radical) : rat_(std::move(rational)), rad_(std::move(radical)) {}

    static Scalar rt2() { return Scalar(Rational(0), Rational(1)); }

    const Rational& rational_part() const { return rat_; }
    const Rational& radical_part() const { return rad_; }

    bool is_zero() const { return rat_.is_zero() && rad_.is_zero(); }
    bool is_rational() const { return rad_.is_zero(); }

    /// (a + b rt2)^-1 = (a - b rt2) / (a^2 - 2 b^2). The norm a^2 - 2 b^2
    /// vanishes over Q only at zero, so this is total away from 0.
    Scalar inverse() const;

    Scalar operator-() const { return Scalar(-rat_, -rad_); }

    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    friend bool operator==(const Scalar& a, const Scalar& b) = default;

    /// Canonical but non-numeric order (componentwise); used only for
    /// deterministic tie-breaking, never as the real-number order.
    friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
        if (a.rat_ < b.rat_) return std::strong_ordering::less;
        if (b.rat_ < a.rat_) return std::strong_ordering::greater;
        if (a.rad_ < b.rad_) return std::strong_ordering::less;
        if (b.rad_ < a.rad_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    /// "p/q" when the radical part is 0, "(p/q + r/s*rt2)" otherwise.
    std::string str() const;
    static Scalar parse(std::string_view text);

    friend std::ostream& operator<<(std::ostream& os, const Scalar& s);

private:
    Rational rat_;
    Rational rad_;
};

inline Scalar half() { return Scalar(Rational(1, 2)); }

}  // namespace eala
