#pragma once

#include "eala/scalar.hpp"

#include <cstddef>
#include <vector>

namespace eala {

/// Dense matrix over Scalar, row-major. Sized for the degree-indexed systems
/// this library assembles (hundreds of rows); not a general-purpose BLAS.
class ScalarMatrix {
public:
    ScalarMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

private:
    std::size_t rows_, cols_;
    std::vector<Scalar> data_;
};

struct LinearSolution {
    bool consistent = false;
    /// One solution with every free variable set to 0 (canonical).
    std::vector<Scalar> particular;
    /// Deterministic nullspace basis, one vector per free column.
    std::vector<std::vector<Scalar>> nullspace;
    std::size_t rank = 0;
};

/// Exact Gauss-Jordan with first-nonzero pivoting (deterministic; over an
/// exact field any nonzero pivot is as good as another).
LinearSolution solve_linear(ScalarMatrix a, std::vector<Scalar> rhs);

/// Row-reduces [a | rhs_0 ... rhs_k] once and reports which right-hand
/// sides are consistent. Solutions themselves are not needed by callers.
std::vector<bool> consistent_many(ScalarMatrix a, const std::vector<std::vector<Scalar>>& rhss);

/// Exact determinant (square input required).
Scalar determinant(ScalarMatrix a);

}  // namespace eala
