#include "eala/lie_torus.hpp"

#include "eala/exceptions.hpp"
#include "eala/linear.hpp"

namespace eala {

LieTorusElement root_component(const LieTorusElement& x, int root) {
    const Matrix2& m = x.matrix();
    switch (root) {
        case 2:
            return LieTorusElement(Matrix2::single(0, 1, m.at(0, 1)));
        case -2:
            return LieTorusElement(Matrix2::single(1, 0, m.at(1, 0)));
        case 0:
            return LieTorusElement(Matrix2::diag(m.at(0, 0), m.at(1, 1)));
        default:
            throw BadRootIndex(root);
    }
}

LieTorusElement degree_component(const LieTorusElement& x, Degree d) {
    Matrix2 m;
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) m.at(r, c) = x.matrix().at(r, c).degree_part(d);
    return LieTorusElement(std::move(m));
}

Scalar form_L(const Matrix2& x, const Matrix2& y) {
    TorusElement sum = x.at(0, 0) * y.at(0, 0) + x.at(0, 1) * y.at(1, 0) +
                       x.at(1, 0) * y.at(0, 1) + x.at(1, 1) * y.at(1, 1);
    return sum.component({0, 0});
}

int slice_dimension(const GradedIndex& idx) {
    if (idx.root != 0) return 1;
    return idx.degree.both_even() ? 1 : 2;
}

std::vector<LieTorusElement> slice_basis(const GradedIndex& idx) {
    TorusElement m = TorusElement::monomial(idx.degree);
    switch (idx.root) {
        case 2:
            return {LieTorusElement(Matrix2::single(0, 1, m))};
        case -2:
            return {LieTorusElement(Matrix2::single(1, 0, m))};
        case 0: {
            std::vector<LieTorusElement> out;
            out.emplace_back(Matrix2::diag(m, -m));
            if (!idx.degree.both_even()) out.emplace_back(Matrix2::diag(m, m));
            return out;
        }
        default:
            throw BadRootIndex(idx.root);
    }
}

std::vector<GradedBasisElement> graded_basis(int box) {
    std::vector<GradedBasisElement> out;
    for (std::int32_t a = -box; a <= box; ++a)
        for (std::int32_t b = -box; b <= box; ++b)
            for (int root : {-2, 0, 2}) {
                GradedIndex idx{root, Degree{a, b}};
                for (auto& el : slice_basis(idx)) out.push_back({idx, std::move(el)});
            }
    return out;
}

Scalar gram_determinant(const GradedIndex& idx) {
    GradedIndex dual{-idx.root, -idx.degree};
    std::vector<LieTorusElement> rows = slice_basis(idx);
    std::vector<LieTorusElement> cols = slice_basis(dual);
    ScalarMatrix gram(rows.size(), cols.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < cols.size(); ++c) gram.at(r, c) = form_L(rows[r], cols[c]);
    return determinant(std::move(gram));
}

}  // namespace eala
