#pragma once

#include "eala/matrix2.hpp"

#include <map>
#include <utility>
#include <vector>

namespace eala {

/// Independent check of the sl2 trace criterion: the k-span of all brackets
/// of single-entry monomial matrices with degrees in [-box, box]^2,
/// maintained in echelon form over coordinates (entry, degree). Membership
/// is exact reduction against that span; no path through is_in_sl2.
class Sl2Span {
public:
    explicit Sl2Span(int box);  // DegreeOverflow beyond the configured bound

    int box() const { return box_; }

    bool contains(const Matrix2& x) const;

private:
    using Coord = std::pair<int, Degree>;
    using SparseRow = std::map<Coord, Scalar>;

    static SparseRow to_row(const Matrix2& x);
    /// Reduces `row` by the stored pivots in place; empty result = member.
    void reduce(SparseRow& row) const;
    void insert(SparseRow row);

    int box_;
    std::map<Coord, SparseRow> pivots_;
};

/// Spec-level entry point; assembles the span for `box` on each call.
bool sl2_membership_bruteforce(const Matrix2& x, int box);

/// All single-entry monomial matrices E_rc(i^a j^b), degrees in
/// [-box, box]^2, in deterministic (entry, degree) order.
std::vector<Matrix2> monomial_matrices(int box);

inline constexpr int kMaxBruteforceBox = 4;

}  // namespace eala
