#include "eala/torus.hpp"

#include "eala/exceptions.hpp"

#include <cctype>
#include <cstdlib>
#include <ostream>
#include <sstream>

namespace eala {

namespace {

std::int32_t checked_add(std::int32_t x, std::int32_t y) {
    std::int64_t sum = static_cast<std::int64_t>(x) + y;
    if (sum > kDegreeLimit || sum < -kDegreeLimit)
        throw DegreeOverflow("exponent " + std::to_string(sum));
    return static_cast<std::int32_t>(sum);
}

bool odd(std::int32_t v) { return v % 2 != 0; }

}  // namespace

Degree operator+(Degree x, Degree y) { return {checked_add(x.a, y.a), checked_add(x.b, y.b)}; }
Degree operator-(Degree x, Degree y) { return {checked_add(x.a, -y.a), checked_add(x.b, -y.b)}; }

std::ostream& operator<<(std::ostream& os, Degree d) { return os << '(' << d.a << ',' << d.b << ')'; }

TorusElement TorusElement::monomial(Degree d, Scalar coeff) {
    TorusElement x;
    if (!coeff.is_zero()) x.terms_.emplace(d, std::move(coeff));
    return x;
}

Scalar TorusElement::component(Degree d) const {
    auto it = terms_.find(d);
    return it == terms_.end() ? Scalar(0) : it->second;
}

TorusElement TorusElement::even_even_part() const {
    TorusElement out;
    for (const auto& [d, c] : terms_)
        if (d.both_even()) out.terms_.emplace(d, c);
    return out;
}

TorusElement TorusElement::degree_part(Degree d) const {
    TorusElement out;
    if (auto it = terms_.find(d); it != terms_.end()) out.terms_.emplace(d, it->second);
    return out;
}

std::vector<Degree> TorusElement::support() const {
    std::vector<Degree> out;
    out.reserve(terms_.size());
    for (const auto& [d, c] : terms_) out.push_back(d);
    return out;
}

void TorusElement::add_term(Degree d, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(d, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

TorusElement TorusElement::operator-() const {
    TorusElement out;
    for (const auto& [d, c] : terms_) out.terms_.emplace(d, -c);
    return out;
}

TorusElement& TorusElement::operator+=(const TorusElement& o) {
    for (const auto& [d, c] : o.terms_) add_term(d, c);
    return *this;
}

TorusElement& TorusElement::operator-=(const TorusElement& o) {
    for (const auto& [d, c] : o.terms_) add_term(d, -c);
    return *this;
}

TorusElement operator*(const TorusElement& x, const TorusElement& y) {
    TorusElement out;
    for (const auto& [dx, cx] : x.terms_) {
        for (const auto& [dy, cy] : y.terms_) {
            Scalar c = cx * cy;
            if (odd(dx.b) && odd(dy.a)) c = -c;
            out.add_term(dx + dy, c);
        }
    }
    return out;
}

TorusElement operator*(const Scalar& c, const TorusElement& x) {
    TorusElement out;
    if (c.is_zero()) return out;
    for (const auto& [d, xc] : x.terms_) {
        Scalar prod = c * xc;
        if (!prod.is_zero()) out.terms_.emplace(d, std::move(prod));
    }
    return out;
}

TorusElement TorusElement::conjugate() const {
    TorusElement out;
    for (const auto& [d, c] : terms_) out.terms_.emplace(d, d.both_even() ? c : -c);
    return out;
}

TorusElement TorusElement::monomial_inverse() const {
    if (!is_monomial()) throw NonInvertible(is_zero() ? "zero" : "support has " + std::to_string(terms_.size()) + " terms");
    const auto& [d, c] = *terms_.begin();
    Scalar coeff = c.inverse();
    if (odd(d.a) && odd(d.b)) coeff = -coeff;
    return monomial(-d, coeff);
}

std::string TorusElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [d, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c.str();
        if (!d.is_zero()) os << "*i^" << d.a << "*j^" << d.b;
    }
    return os.str();
}

namespace {

// Splits on " + " at parenthesis depth 0; scalar signs live inside terms.
std::vector<std::string> split_terms(std::string_view text) {
    std::vector<std::string> out;
    int depth = 0;
    size_t start = 0;
    for (size_t i = 0; i < text.size(); ++i) {
        char ch = text[i];
        if (ch == '(') ++depth;
        else if (ch == ')') --depth;
        else if (depth == 0 && ch == ' ' && text.substr(i, 3) == " + ") {
            out.emplace_back(text.substr(start, i - start));
            i += 2;
            start = i + 1;
        }
    }
    out.emplace_back(text.substr(start));
    return out;
}

std::int32_t parse_exponent(std::string_view text, size_t& pos) {
    size_t start = pos;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) throw ParseError("expected exponent in '" + std::string(text) + "'");
    long v = std::strtol(std::string(text.substr(start, pos - start)).c_str(), nullptr, 10);
    if (v > kDegreeLimit || v < -kDegreeLimit) throw DegreeOverflow("exponent " + std::to_string(v));
    return static_cast<std::int32_t>(v);
}

}  // namespace

TorusElement TorusElement::parse(std::string_view text) {
    if (text == "0") return zero();
    TorusElement out;
    for (const std::string& term : split_terms(text)) {
        size_t star = std::string::npos;
        int depth = 0;
        for (size_t i = 0; i < term.size(); ++i) {
            if (term[i] == '(') ++depth;
            else if (term[i] == ')') --depth;
            else if (depth == 0 && term.compare(i, 3, "*i^") == 0) { star = i; break; }
        }
        if (star == std::string::npos) {
            out.add_term({0, 0}, Scalar::parse(term));
            continue;
        }
        Scalar coeff = Scalar::parse(term.substr(0, star));
        size_t pos = star + 3;
        std::int32_t a = parse_exponent(term, pos);
        if (term.compare(pos, 3, "*j^") != 0) throw ParseError("expected '*j^' in '" + term + "'");
        pos += 3;
        std::int32_t b = parse_exponent(term, pos);
        if (pos != term.size()) throw ParseError("trailing characters in '" + term + "'");
        out.add_term({a, b}, coeff);
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const TorusElement& x) { return os << x.str(); }

}  // namespace eala
