#include "eala/sl2_oracle.hpp"

#include "eala/exceptions.hpp"

namespace eala {

std::vector<Matrix2> monomial_matrices(int box) {
    std::vector<Matrix2> out;
    out.reserve(4 * (2 * box + 1) * (2 * box + 1));
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c)
            for (std::int32_t a = -box; a <= box; ++a)
                for (std::int32_t b = -box; b <= box; ++b)
                    out.push_back(Matrix2::single(r, c, TorusElement::monomial({a, b})));
    return out;
}

Sl2Span::SparseRow Sl2Span::to_row(const Matrix2& x) {
    SparseRow row;
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c)
            for (const auto& [d, coeff] : x.at(r, c).terms()) row.emplace(Coord{r * 2 + c, d}, coeff);
    return row;
}

void Sl2Span::reduce(SparseRow& row) const {
    while (!row.empty()) {
        auto lead = row.begin();
        auto pivot = pivots_.find(lead->first);
        if (pivot == pivots_.end()) return;
        Scalar factor = lead->second;
        for (const auto& [coord, value] : pivot->second) {
            auto it = row.find(coord);
            if (it == row.end()) {
                row.emplace(coord, -(factor * value));
            } else {
                it->second -= factor * value;
                if (it->second.is_zero()) row.erase(it);
            }
        }
    }
}

void Sl2Span::insert(SparseRow row) {
    reduce(row);
    if (row.empty()) return;
    Scalar inv = row.begin()->second.inverse();
    for (auto& [coord, value] : row) value *= inv;
    Coord lead = row.begin()->first;
    pivots_.emplace(lead, std::move(row));
}

Sl2Span::Sl2Span(int box) : box_(box) {
    if (box < 1) throw ConfigError("brute-force box must be >= 1");
    if (box > kMaxBruteforceBox)
        throw DegreeOverflow("brute-force box " + std::to_string(box) + " exceeds bound " +
                             std::to_string(kMaxBruteforceBox));
    std::vector<Matrix2> gens = monomial_matrices(box);
    for (const Matrix2& x : gens)
        for (const Matrix2& y : gens) {
            Matrix2 g = bracket(x, y);
            if (!g.is_zero()) insert(to_row(g));
        }
}

bool Sl2Span::contains(const Matrix2& x) const {
    SparseRow row = to_row(x);
    reduce(row);
    return row.empty();
}

bool sl2_membership_bruteforce(const Matrix2& x, int box) { return Sl2Span(box).contains(x); }

}  // namespace eala
