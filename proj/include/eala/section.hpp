#pragma once

#include "eala/matrix2.hpp"

#include <filesystem>
#include <utility>
#include <vector>

namespace eala {

/// Applies the Q-linear map m(u, v) = (1+i)u - (1+j)v to a column of V.
TorusElement apply_m(const TorusElement& u, const TorusElement& v);

/// Left action of a matrix on a column (u, v) of V = Q + Q.
std::pair<TorusElement, TorusElement> apply_matrix(const Matrix2& m, const TorusElement& u,
                                                   const TorusElement& v);

/// A right inverse of m of the form q(x) = (a*x, b*x); the defining identity
/// (1+i)a - (1+j)b = 1 is rechecked on construction.
class Section {
public:
    Section(TorusElement a, TorusElement b);  // throws InvalidSection

    const TorusElement& a() const { return a_; }
    const TorusElement& b() const { return b_; }

private:
    TorusElement a_, b_;
};

/// Solves (1+i)a - (1+j)b = 1 over coefficients supported in [-box, box]^2;
/// throws BoxExhausted when the degree-indexed linear system is infeasible.
/// Among the affine family of solutions, picks the one of minimal total
/// support, ties broken by lex-least support then lex-least coefficients.
/// When the subset search would exceed its budget (never on the escalation
/// path), falls back to deterministic greedy zeroing of coordinates.
Section solve_section(int box);

struct SectionSolve {
    Section section;
    int box;  // minimal feasible box
};

/// Escalates solve_section from box 0 until feasible.
SectionSolve solve_section_auto(int max_box = 6);

/// p = q . m = [[a(1+i), -a(1+j)], [b(1+i), -b(1+j)]]; idempotent because
/// m . q = id. Verified exactly before returning.
Matrix2 build_projection(const Section& sec);

/// Deterministic basis of the space of columns (w1, w2) supported in
/// [-box, box]^2 with m(w1, w2) = 0 (the box slice of W = ker m).
std::vector<std::pair<TorusElement, TorusElement>> kernel_basis(int box);

/// Fixture: the pinned section with its box and residual attestation line.
void write_section_fixture(const std::filesystem::path& path, const SectionSolve& solve);
SectionSolve load_section_fixture(const std::filesystem::path& path);  // FixtureError

}  // namespace eala
