#pragma once

#include "eala/matrix2.hpp"

#include <string>
#include <vector>

namespace eala {

/// Index of one slice of the double grading of sl2(Q): a root in {-2, 0, 2}
/// and a lattice degree in Z^2.
struct GradedIndex {
    int root = 0;
    Degree degree;

    friend auto operator<=>(const GradedIndex&, const GradedIndex&) = default;
};

/// Root-space projection: +2 keeps the upper-right entry, -2 the lower-left,
/// 0 the diagonal. Throws BadRootIndex otherwise.
LieTorusElement root_component(const LieTorusElement& x, int root);

/// Entrywise restriction to the lattice degree d.
LieTorusElement degree_component(const LieTorusElement& x, Degree d);

/// The invariant form on sl2(Q): the (0,0)-coefficient of
/// x11*y11 + x12*y21 + x21*y12 + x22*y22.
Scalar form_L(const Matrix2& x, const Matrix2& y);
inline Scalar form_L(const LieTorusElement& x, const LieTorusElement& y) {
    return form_L(x.matrix(), y.matrix());
}

/// 1 for the root-(+-2) slices and the (even, even) root-0 slices, else 2.
int slice_dimension(const GradedIndex& idx);

/// Deterministic basis of one graded slice: E12/E21 of the monomial for the
/// outer roots; diag(m, -m), then diag(m, m) when the degree is not
/// (even, even), for root 0.
std::vector<LieTorusElement> slice_basis(const GradedIndex& idx);

struct GradedBasisElement {
    GradedIndex index;
    LieTorusElement element;
};

/// All graded basis elements with degree in [-box, box]^2, ordered
/// lexicographically by (degree, root, position within the slice), so Gram
/// matrices and reports are reproducible.
std::vector<GradedBasisElement> graded_basis(int box);

/// Gram matrix of the pairing between slice_basis(idx) and
/// slice_basis(-idx); nonsingular in every slice when the form is
/// nondegenerate.
Scalar gram_determinant(const GradedIndex& idx);

}  // namespace eala
