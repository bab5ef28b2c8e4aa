#include "eala/section.hpp"

#include "eala/exceptions.hpp"
#include "eala/linear.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <numeric>
#include <sstream>

namespace eala {

TorusElement apply_m(const TorusElement& u, const TorusElement& v) {
    TorusElement one_plus_i = TorusElement::one() + TorusElement::i_gen();
    TorusElement one_plus_j = TorusElement::one() + TorusElement::j_gen();
    return one_plus_i * u - one_plus_j * v;
}

std::pair<TorusElement, TorusElement> apply_matrix(const Matrix2& m, const TorusElement& u,
                                                   const TorusElement& v) {
    return {m.at(0, 0) * u + m.at(0, 1) * v, m.at(1, 0) * u + m.at(1, 1) * v};
}

Section::Section(TorusElement a, TorusElement b) : a_(std::move(a)), b_(std::move(b)) {
    TorusElement residual = apply_m(a_, b_) - TorusElement::one();
    if (!residual.is_zero()) throw InvalidSection(residual.str());
}

namespace {

std::vector<Degree> box_degrees(int box) {
    std::vector<Degree> out;
    out.reserve((2 * box + 1) * (2 * box + 1));
    for (std::int32_t a = -box; a <= box; ++a)
        for (std::int32_t b = -box; b <= box; ++b) out.push_back({a, b});
    return out;
}

// The system [(1+i)a - (1+j)b]_(p,q) = rhs_(p,q): coefficient +1 at a_(p,q)
// and a_(p-1,q), -1 at b_(p,q), -(-1)^p at b_(p,q-1). Unknowns are the
// a-coefficients over the box followed by the b-coefficients.
struct SectionSystem {
    std::vector<Degree> unknown_degrees;  // per half
    ScalarMatrix matrix;
    std::vector<Scalar> rhs;
};

SectionSystem build_system(int box, bool homogeneous) {
    std::vector<Degree> degrees = box_degrees(box);
    const std::size_t n = degrees.size();

    std::vector<Degree> eq_degrees;
    for (std::int32_t p = -box; p <= box + 1; ++p)
        for (std::int32_t q = -box; q <= box + 1; ++q) eq_degrees.push_back({p, q});

    std::map<Degree, std::size_t> unknown_at;
    for (std::size_t i = 0; i < n; ++i) unknown_at.emplace(degrees[i], i);

    SectionSystem sys{degrees, ScalarMatrix(eq_degrees.size(), 2 * n),
                      std::vector<Scalar>(eq_degrees.size(), Scalar(0))};
    for (std::size_t r = 0; r < eq_degrees.size(); ++r) {
        Degree d = eq_degrees[r];
        if (auto it = unknown_at.find(d); it != unknown_at.end()) {
            sys.matrix.at(r, it->second) += Scalar(1);
            sys.matrix.at(r, n + it->second) -= Scalar(1);
        }
        if (auto it = unknown_at.find({d.a - 1, d.b}); it != unknown_at.end())
            sys.matrix.at(r, it->second) += Scalar(1);
        if (auto it = unknown_at.find({d.a, d.b - 1}); it != unknown_at.end())
            sys.matrix.at(r, n + it->second) -= Scalar(d.a % 2 == 0 ? 1 : -1);
        if (!homogeneous && d.is_zero()) sys.rhs[r] = Scalar(1);
    }
    return sys;
}

std::pair<TorusElement, TorusElement> vector_to_pair(const std::vector<Scalar>& coords,
                                                     const std::vector<Degree>& degrees) {
    const std::size_t n = degrees.size();
    TorusElement a, b;
    for (std::size_t i = 0; i < n; ++i) {
        if (!coords[i].is_zero()) a += TorusElement::monomial(degrees[i], coords[i]);
        if (!coords[n + i].is_zero()) b += TorusElement::monomial(degrees[i], coords[n + i]);
    }
    return {std::move(a), std::move(b)};
}

std::vector<Scalar> combine(const LinearSolution& family, const std::vector<Scalar>& coeffs) {
    std::vector<Scalar> out = family.particular;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        if (coeffs[k].is_zero()) continue;
        for (std::size_t i = 0; i < out.size(); ++i) out[i] += coeffs[k] * family.nullspace[k][i];
    }
    return out;
}

// Feasibility of zeroing the listed coordinates within the affine family;
// returns the canonical combination coefficients when consistent.
std::optional<std::vector<Scalar>> zero_coords(const LinearSolution& family,
                                               const std::vector<std::size_t>& coords) {
    const std::size_t d = family.nullspace.size();
    ScalarMatrix a(coords.size(), d);
    std::vector<Scalar> rhs(coords.size());
    for (std::size_t r = 0; r < coords.size(); ++r) {
        for (std::size_t k = 0; k < d; ++k) a.at(r, k) = family.nullspace[k][coords[r]];
        rhs[r] = -family.particular[coords[r]];
    }
    LinearSolution sol = solve_linear(std::move(a), std::move(rhs));
    if (!sol.consistent) return std::nullopt;
    return sol.particular;
}

std::vector<std::size_t> support_of(const std::vector<Scalar>& v) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) out.push_back(i);
    return out;
}

bool lex_less(const std::vector<Scalar>& x, const std::vector<Scalar>& y) {
    std::vector<std::size_t> sx = support_of(x), sy = support_of(y);
    if (sx != sy) return sx < sy;
    for (std::size_t i = 0; i < x.size(); ++i) {
        auto cmp = x[i] <=> y[i];
        if (cmp != 0) return cmp < 0;
    }
    return false;
}

constexpr std::size_t kSubsetBudget = 200000;

std::vector<Scalar> minimize_support(const LinearSolution& family) {
    if (family.nullspace.empty()) return family.particular;

    std::vector<std::size_t> active;
    for (std::size_t i = 0; i < family.particular.size(); ++i) {
        bool touched = !family.particular[i].is_zero();
        for (const auto& nv : family.nullspace) touched = touched || !nv[i].is_zero();
        if (touched) active.push_back(i);
    }

    // Subsets of `active` that stay free (the candidate support), smallest
    // first; everything else is pinned to zero.
    std::size_t budget = kSubsetBudget;
    for (std::size_t k = 0; k <= active.size(); ++k) {
        std::vector<std::size_t> pick(k);
        std::iota(pick.begin(), pick.end(), 0);
        std::vector<std::vector<Scalar>> candidates;
        bool exhausted_budget = false;
        while (true) {
            if (budget-- == 0) { exhausted_budget = true; break; }
            std::vector<std::size_t> zeros;
            std::size_t next = 0;
            for (std::size_t i = 0; i < active.size(); ++i) {
                if (next < k && pick[next] == i) ++next;
                else zeros.push_back(active[i]);
            }
            if (auto coeffs = zero_coords(family, zeros)) {
                std::vector<Scalar> candidate = combine(family, *coeffs);
                candidates.push_back(std::move(candidate));
            }
            // next k-combination
            std::size_t j = k;
            while (j > 0 && pick[j - 1] == active.size() - (k - j) - 1) --j;
            if (j == 0) break;
            ++pick[j - 1];
            for (std::size_t l = j; l < k; ++l) pick[l] = pick[l - 1] + 1;
        }
        if (!candidates.empty()) {
            return *std::min_element(candidates.begin(), candidates.end(),
                                     [](const auto& x, const auto& y) { return lex_less(x, y); });
        }
        if (exhausted_budget) break;
    }

    // Greedy deterministic fallback: pin coordinates to zero one at a time
    // while the family stays feasible.
    std::vector<std::size_t> pinned;
    for (std::size_t i : active) {
        pinned.push_back(i);
        if (!zero_coords(family, pinned)) pinned.pop_back();
    }
    auto coeffs = zero_coords(family, pinned);
    return combine(family, *coeffs);
}

}  // namespace

Section solve_section(int box) {
    if (box < 0) throw ConfigError("section box must be >= 0");
    SectionSystem sys = build_system(box, /*homogeneous=*/false);
    LinearSolution family = solve_linear(std::move(sys.matrix), std::move(sys.rhs));
    if (!family.consistent) throw BoxExhausted(box);
    auto [a, b] = vector_to_pair(minimize_support(family), sys.unknown_degrees);
    return Section(std::move(a), std::move(b));
}

SectionSolve solve_section_auto(int max_box) {
    for (int box = 0; box <= max_box; ++box) {
        try {
            return {solve_section(box), box};
        } catch (const BoxExhausted&) {
        }
    }
    throw BoxExhausted(max_box);
}

Matrix2 build_projection(const Section& sec) {
    TorusElement one_plus_i = TorusElement::one() + TorusElement::i_gen();
    TorusElement one_plus_j = TorusElement::one() + TorusElement::j_gen();
    Matrix2 p;
    p.at(0, 0) = sec.a() * one_plus_i;
    p.at(0, 1) = -(sec.a() * one_plus_j);
    p.at(1, 0) = sec.b() * one_plus_i;
    p.at(1, 1) = -(sec.b() * one_plus_j);
    if (!(p * p == p)) throw NotIdempotent();
    return p;
}

std::vector<std::pair<TorusElement, TorusElement>> kernel_basis(int box) {
    if (box < 0) throw ConfigError("kernel box must be >= 0");
    SectionSystem sys = build_system(box, /*homogeneous=*/true);
    LinearSolution family = solve_linear(std::move(sys.matrix), std::move(sys.rhs));
    std::vector<std::pair<TorusElement, TorusElement>> out;
    out.reserve(family.nullspace.size());
    for (const auto& v : family.nullspace) out.push_back(vector_to_pair(v, sys.unknown_degrees));
    return out;
}

void write_section_fixture(const std::filesystem::path& path, const SectionSolve& solve) {
    std::ofstream os(path);
    if (!os) throw ReportWriteError(path.string());
    TorusElement residual = apply_m(solve.section.a(), solve.section.b()) - TorusElement::one();
    os << "box: " << solve.box << "\n";
    os << "a: " << solve.section.a() << "\n";
    os << "b: " << solve.section.b() << "\n";
    os << "residual: " << residual << "\n";
    if (!os) throw ReportWriteError(path.string());
}

SectionSolve load_section_fixture(const std::filesystem::path& path) {
    std::ifstream is(path);
    if (!is) throw FixtureError("cannot open " + path.string());
    int box = -1;
    std::string a_text, b_text, residual_text;
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (line.rfind("box: ", 0) == 0) box = std::stoi(line.substr(5));
        else if (line.rfind("a: ", 0) == 0) a_text = line.substr(3);
        else if (line.rfind("b: ", 0) == 0) b_text = line.substr(3);
        else if (line.rfind("residual: ", 0) == 0) residual_text = line.substr(10);
        else throw FixtureError("unexpected line '" + line + "'");
    }
    if (box < 0 || a_text.empty() || b_text.empty() || residual_text.empty())
        throw FixtureError("missing field in " + path.string());
    if (residual_text != "0") throw FixtureError("recorded residual is not 0");
    try {
        Section sec(TorusElement::parse(a_text), TorusElement::parse(b_text));
        return {std::move(sec), box};
    } catch (const InvalidSection& e) {
        throw FixtureError(e.what());
    }
}

}  // namespace eala
