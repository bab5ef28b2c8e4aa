#include "eala/matrix2.hpp"

#include "eala/exceptions.hpp"

#include <ostream>
#include <sstream>
#include <vector>

namespace eala {

Matrix2 Matrix2::identity() {
    Matrix2 m;
    m.at(0, 0) = TorusElement::one();
    m.at(1, 1) = TorusElement::one();
    return m;
}

Matrix2 Matrix2::single(int r, int c, TorusElement q) {
    Matrix2 m;
    m.at(r, c) = std::move(q);
    return m;
}

Matrix2 Matrix2::diag(TorusElement upper, TorusElement lower) {
    Matrix2 m;
    m.at(0, 0) = std::move(upper);
    m.at(1, 1) = std::move(lower);
    return m;
}

bool Matrix2::is_zero() const {
    for (const auto& q : e_)
        if (!q.is_zero()) return false;
    return true;
}

Matrix2 Matrix2::operator-() const {
    Matrix2 m;
    for (int k = 0; k < 4; ++k) m.e_[k] = -e_[k];
    return m;
}

Matrix2& Matrix2::operator+=(const Matrix2& o) {
    for (int k = 0; k < 4; ++k) e_[k] += o.e_[k];
    return *this;
}

Matrix2& Matrix2::operator-=(const Matrix2& o) {
    for (int k = 0; k < 4; ++k) e_[k] -= o.e_[k];
    return *this;
}

Matrix2 operator*(const Matrix2& x, const Matrix2& y) {
    Matrix2 m;
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c)
            m.at(r, c) = x.at(r, 0) * y.at(0, c) + x.at(r, 1) * y.at(1, c);
    return m;
}

Matrix2 operator*(const Scalar& c, const Matrix2& x) {
    Matrix2 m;
    for (int k = 0; k < 4; ++k) m.e_[k] = c * x.e_[k];
    return m;
}

std::string Matrix2::str() const {
    std::ostringstream os;
    os << "[[" << at(0, 0) << ", " << at(0, 1) << "], [" << at(1, 0) << ", " << at(1, 1) << "]]";
    return os.str();
}

namespace {

// Entries contain " + " and parens but never ',' or '[', so splitting at
// depth-0 commas is unambiguous. Expects the enclosing brackets stripped.
std::vector<std::string> split_grid(std::string_view text) {
    std::vector<std::string> cells;
    int depth = 0;
    size_t start = 0;
    for (size_t i = 0; i < text.size(); ++i) {
        char ch = text[i];
        if (ch == '[' || ch == '(') ++depth;
        else if (ch == ']' || ch == ')') --depth;
        else if (ch == ',' && depth == 0) {
            cells.emplace_back(text.substr(start, i - start));
            start = i + 1;
        }
    }
    cells.emplace_back(text.substr(start));
    return cells;
}

std::string strip(std::string s, char open, char close) {
    size_t b = s.find_first_not_of(' ');
    size_t e = s.find_last_not_of(' ');
    if (b == std::string::npos || s[b] != open || s[e] != close)
        throw ParseError("malformed matrix cell '" + s + "'");
    return s.substr(b + 1, e - b - 1);
}

std::string trim(std::string s) {
    size_t b = s.find_first_not_of(' ');
    size_t e = s.find_last_not_of(' ');
    if (b == std::string::npos) throw ParseError("empty matrix cell");
    return s.substr(b, e - b + 1);
}

}  // namespace

Matrix2 Matrix2::parse(std::string_view text) {
    std::string body = strip(std::string(text), '[', ']');
    // body = "[a, b], [c, d]" — split into the two rows at depth 0.
    std::vector<std::string> rows;
    int depth = 0;
    size_t start = 0;
    for (size_t i = 0; i < body.size(); ++i) {
        char ch = body[i];
        if (ch == '[' || ch == '(') ++depth;
        else if (ch == ']' || ch == ')') --depth;
        else if (ch == ',' && depth == 0) {
            rows.emplace_back(body.substr(start, i - start));
            start = i + 1;
        }
    }
    rows.emplace_back(body.substr(start));
    if (rows.size() != 2) throw ParseError("expected 2 rows in matrix '" + std::string(text) + "'");

    Matrix2 m;
    for (int r = 0; r < 2; ++r) {
        std::vector<std::string> cells = split_grid(strip(rows[r], '[', ']'));
        if (cells.size() != 2) throw ParseError("expected 2 entries in row '" + rows[r] + "'");
        for (int c = 0; c < 2; ++c) m.at(r, c) = TorusElement::parse(trim(cells[c]));
    }
    return m;
}

std::ostream& operator<<(std::ostream& os, const Matrix2& x) { return os << x.str(); }

LieTorusElement::LieTorusElement(Matrix2 m) : m_(std::move(m)) {
    if (!is_in_sl2(m_)) throw NotInSl2();
}

}  // namespace eala
