#include "eala/linear.hpp"

#include <cassert>
#include <utility>

namespace eala {

namespace {

// Reduced row echelon form of [a | extra columns]; returns pivot column of
// each pivot row in order. `split` marks where the extra columns begin.
std::vector<std::size_t> rref(ScalarMatrix& m, std::size_t split) {
    std::vector<std::size_t> pivot_cols;
    std::size_t row = 0;
    for (std::size_t col = 0; col < split && row < m.rows(); ++col) {
        std::size_t pivot = row;
        while (pivot < m.rows() && m.at(pivot, col).is_zero()) ++pivot;
        if (pivot == m.rows()) continue;
        if (pivot != row)
            for (std::size_t c = col; c < m.cols(); ++c) std::swap(m.at(row, c), m.at(pivot, c));
        Scalar inv = m.at(row, col).inverse();
        for (std::size_t c = col; c < m.cols(); ++c) m.at(row, c) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || m.at(r, col).is_zero()) continue;
            Scalar factor = m.at(r, col);
            for (std::size_t c = col; c < m.cols(); ++c) m.at(r, c) -= factor * m.at(row, c);
        }
        pivot_cols.push_back(col);
        ++row;
    }
    return pivot_cols;
}

}  // namespace

LinearSolution solve_linear(ScalarMatrix a, std::vector<Scalar> rhs) {
    assert(rhs.size() == a.rows());
    const std::size_t n = a.cols();
    ScalarMatrix m(a.rows(), n + 1);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < n; ++c) m.at(r, c) = std::move(a.at(r, c));
        m.at(r, n) = std::move(rhs[r]);
    }

    std::vector<std::size_t> pivot_cols = rref(m, n);
    LinearSolution out;
    out.rank = pivot_cols.size();

    for (std::size_t r = pivot_cols.size(); r < m.rows(); ++r)
        if (!m.at(r, n).is_zero()) return out;  // 0 = nonzero row
    out.consistent = true;

    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : pivot_cols) is_pivot[c] = true;

    out.particular.assign(n, Scalar(0));
    for (std::size_t r = 0; r < pivot_cols.size(); ++r) out.particular[pivot_cols[r]] = m.at(r, n);

    for (std::size_t free_col = 0; free_col < n; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<Scalar> v(n, Scalar(0));
        v[free_col] = Scalar(1);
        for (std::size_t r = 0; r < pivot_cols.size(); ++r) v[pivot_cols[r]] = -m.at(r, free_col);
        out.nullspace.push_back(std::move(v));
    }
    return out;
}

std::vector<bool> consistent_many(ScalarMatrix a, const std::vector<std::vector<Scalar>>& rhss) {
    const std::size_t n = a.cols();
    const std::size_t k = rhss.size();
    ScalarMatrix m(a.rows(), n + k);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < n; ++c) m.at(r, c) = std::move(a.at(r, c));
        for (std::size_t j = 0; j < k; ++j) m.at(r, n + j) = rhss[j][r];
    }

    std::vector<std::size_t> pivot_cols = rref(m, n);
    std::vector<bool> ok(k, true);
    for (std::size_t r = pivot_cols.size(); r < m.rows(); ++r)
        for (std::size_t j = 0; j < k; ++j)
            if (!m.at(r, n + j).is_zero()) ok[j] = false;
    return ok;
}

Scalar determinant(ScalarMatrix a) {
    assert(a.rows() == a.cols());
    const std::size_t n = a.rows();
    Scalar det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a.at(pivot, col).is_zero()) ++pivot;
        if (pivot == n) return Scalar(0);
        if (pivot != col) {
            for (std::size_t c = col; c < n; ++c) std::swap(a.at(col, c), a.at(pivot, c));
            det = -det;
        }
        det *= a.at(col, col);
        Scalar inv = a.at(col, col).inverse();
        for (std::size_t r = col + 1; r < n; ++r) {
            if (a.at(r, col).is_zero()) continue;
            Scalar factor = a.at(r, col) * inv;
            for (std::size_t c = col; c < n; ++c) a.at(r, c) -= factor * a.at(col, c);
        }
    }
    return det;
}

}  // namespace eala
