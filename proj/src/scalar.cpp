#include "eala/scalar.hpp"

#include "eala/exceptions.hpp"

#include <cctype>
#include <ostream>

namespace eala {

namespace {

size_t skip_spaces(std::string_view text, size_t pos) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    return pos;
}

// Signed integer literal starting at pos; advances pos past it.
Integer parse_integer_at(std::string_view text, size_t& pos) {
    size_t start = pos;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    size_t digits_begin = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == digits_begin) throw ParseError("expected integer in '" + std::string(text) + "'");
    return Integer(std::string(text.substr(start, pos - start)));
}

Rational parse_rational_at(std::string_view text, size_t& pos) {
    Integer num = parse_integer_at(text, pos);
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        Integer den = parse_integer_at(text, pos);
        if (den <= 0) throw ParseError("denominator must be positive in '" + std::string(text) + "'");
        return Rational(num, den);
    }
    return Rational(num);
}

}  // namespace

std::string rational_str(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) {
        s += '/';
        s += denominator(r).str();
    }
    return s;
}

Rational parse_rational(std::string_view text) {
    size_t pos = 0;
    Rational r = parse_rational_at(text, pos);
    if (pos != text.size()) throw ParseError("trailing characters in rational '" + std::string(text) + "'");
    return r;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw DivisionByZero();
    if (rad_.is_zero()) return Scalar(1 / rat_);
    Rational norm = rat_ * rat_ - 2 * rad_ * rad_;
    // norm = 0 with rational parts would make rt2 rational; unreachable, but
    // the zero guard must not silently produce garbage.
    if (norm.is_zero()) throw DivisionByZero();
    return Scalar(rat_ / norm, -rad_ / norm);
}

Scalar& Scalar::operator+=(const Scalar& o) {
    rat_ += o.rat_;
    rad_ += o.rad_;
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    rat_ -= o.rat_;
    rad_ -= o.rad_;
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    if (rad_.is_zero() && o.rad_.is_zero()) {
        rat_ *= o.rat_;
        return *this;
    }
    // (a + b rt2)(c + d rt2) = (ac + 2bd) + (ad + bc) rt2
    Rational a = rat_, b = rad_;
    rat_ = a * o.rat_ + 2 * b * o.rad_;
    rad_ = a * o.rad_ + b * o.rat_;
    return *this;
}

std::string Scalar::str() const {
    if (rad_.is_zero()) return rational_str(rat_);
    return "(" + rational_str(rat_) + " + " + rational_str(rad_) + "*rt2)";
}

Scalar Scalar::parse(std::string_view text) {
    size_t pos = skip_spaces(text, 0);
    if (pos < text.size() && text[pos] == '(') {
        pos = skip_spaces(text, pos + 1);
        Rational rat = parse_rational_at(text, pos);
        pos = skip_spaces(text, pos);
        if (pos >= text.size() || text[pos] != '+') throw ParseError("expected '+' in scalar '" + std::string(text) + "'");
        pos = skip_spaces(text, pos + 1);
        Rational rad = parse_rational_at(text, pos);
        if (text.substr(pos, 4) != "*rt2") throw ParseError("expected '*rt2' in scalar '" + std::string(text) + "'");
        pos += 4;
        if (pos >= text.size() || text[pos] != ')') throw ParseError("expected ')' in scalar '" + std::string(text) + "'");
        pos = skip_spaces(text, pos + 1);
        if (pos != text.size()) throw ParseError("trailing characters in scalar '" + std::string(text) + "'");
        return Scalar(std::move(rat), std::move(rad));
    }
    Rational rat = parse_rational_at(text, pos);
    pos = skip_spaces(text, pos);
    if (pos != text.size()) throw ParseError("trailing characters in scalar '" + std::string(text) + "'");
    return Scalar(std::move(rat));
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace eala
