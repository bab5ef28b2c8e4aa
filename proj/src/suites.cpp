#include "eala/suites.hpp"

#include "eala/exceptions.hpp"
#include "eala/lie_torus.hpp"
#include "eala/linear.hpp"
#include "eala/probe.hpp"
#include "eala/sampling.hpp"
#include "eala/section.hpp"
#include "eala/sl2_oracle.hpp"
#include "eala/spectral.hpp"

#include <chrono>
#include <functional>
#include <map>

namespace eala {

namespace {

// The sl2 oracle box is pinned: the criterion-vs-oracle equivalence is an
// exhaustive finite statement, and the span assembly grows quadratically.
constexpr int kOracleBox = 2;
constexpr int kCenterBox = 2;

struct Context {
    const SuiteConfig& cfg;

    std::optional<SectionSolve> solved;
    std::optional<SectionSolve> active;  // fixture when configured, else solved
    std::optional<SElement> s;
    std::optional<YDecomposition> y;
    std::optional<DPrime> dp;

    const SectionSolve& solve() {
        if (!solved) solved = solve_section_auto();
        return *solved;
    }

    const SectionSolve& section() {
        if (!active) {
            if (cfg.regenerate_fixture) {
                if (!cfg.fixture_path) throw ConfigError("--regenerate-section-fixture needs a fixture path");
                write_section_fixture(*cfg.fixture_path, solve());
            }
            if (cfg.fixture_path) active = load_section_fixture(*cfg.fixture_path);
            else active = solve();
        }
        return *active;
    }

    const SElement& S() {
        if (!s) s = build_S(build_projection(section().section));
        return *s;
    }

    const YDecomposition& Y() {
        if (!y) y = compute_y(S());
        return *y;
    }

    const DPrime& d_prime() {
        if (!dp) dp = build_d_prime(S(), Y());
        return *dp;
    }
};

using CheckFn = std::function<VerificationReport(Context&)>;

struct Check {
    Suite suite;
    const char* id;
    CheckFn run;
};

VerificationReport sampled(const char* id, const Context& ctx, int box) {
    VerificationReport r;
    r.check_id = id;
    r.box = box;
    r.seed = ctx.cfg.seed;
    return r;
}

void fail(VerificationReport& r, std::string witness) {
    r.status = CheckStatus::fail;
    r.witness = std::move(witness);
}

// ---------------------------------------------------------------- torus ---

VerificationReport torus_relations(Context& ctx) {
    VerificationReport r = sampled("torus.relations", ctx, 0);
    TorusElement i = TorusElement::i_gen(), j = TorusElement::j_gen();
    if (!(i * i == TorusElement::t1())) fail(r, (i * i).str());
    else if (!(j * j == TorusElement::t2())) fail(r, (j * j).str());
    else if (!((i * j + j * i).is_zero())) fail(r, (i * j + j * i).str());
    r.samples = 3;
    return r;
}

VerificationReport torus_associativity(Context& ctx) {
    const int box = ctx.cfg.box;
    VerificationReport r = sampled("torus.associativity", ctx, box);
    std::vector<TorusElement> monomials;
    for (std::int32_t a = -box; a <= box; ++a)
        for (std::int32_t b = -box; b <= box; ++b) monomials.push_back(TorusElement::monomial({a, b}));
    for (const auto& x : monomials)
        for (const auto& y : monomials) {
            TorusElement xy = x * y;
            for (const auto& z : monomials) {
                ++r.samples;
                if (!(xy * z == x * (y * z))) {
                    fail(r, (xy * z - x * (y * z)).str());
                    return r;
                }
            }
        }
    return r;
}

VerificationReport torus_grading(Context& ctx) {
    VerificationReport r = sampled("torus.grading", ctx, ctx.cfg.box);
    SampleGen gen(ctx.cfg.seed);
    for (long n = 0; n < ctx.cfg.samples; ++n) {
        ++r.samples;
        TorusElement x = gen.torus_element(ctx.cfg.box), y = gen.torus_element(ctx.cfg.box);
        std::set<Degree> allowed;
        for (Degree dx : x.support())
            for (Degree dy : y.support()) allowed.insert(dx + dy);
        for (Degree d : (x * y).support())
            if (!allowed.contains(d)) {
                fail(r, (x * y).str());
                return r;
            }
    }
    return r;
}

VerificationReport torus_conjugation(Context& ctx) {
    VerificationReport r = sampled("torus.conjugation", ctx, ctx.cfg.box);
    SampleGen gen(ctx.cfg.seed);
    for (long n = 0; n < ctx.cfg.samples; ++n) {
        ++r.samples;
        TorusElement x = gen.torus_element(ctx.cfg.box), y = gen.torus_element(ctx.cfg.box);
        if (!((x * y).conjugate() == y.conjugate() * x.conjugate())) {
            fail(r, (x * y).str());
            return r;
        }
        if (!(x.conjugate().conjugate() == x)) {
            fail(r, x.str());
            return r;
        }
    }
    return r;
}

VerificationReport torus_monomial_inverse(Context& ctx) {
    VerificationReport r = sampled("torus.monomial_inverse", ctx, ctx.cfg.box);
    SampleGen gen(ctx.cfg.seed);
    for (long n = 0; n < ctx.cfg.samples; ++n) {
        ++r.samples;
        TorusElement x = gen.torus_monomial(ctx.cfg.box);
        TorusElement inv = x.monomial_inverse();
        if (!(x * inv == TorusElement::one()) || !(inv * x == TorusElement::one())) {
            fail(r, x.str());
            return r;
        }
    }
    return r;
}

VerificationReport torus_center_span(Context& ctx) {
    const int box = kCenterBox;
    VerificationReport r = sampled("torus.center_span", ctx, box);
    TorusElement i = TorusElement::i_gen(), j = TorusElement::j_gen();

    std::set<Degree> reached;
    std::vector<Degree> degrees;
    for (std::int32_t a = -box; a <= box; ++a)
        for (std::int32_t b = -box; b <= box; ++b) degrees.push_back({a, b});

    for (Degree dx : degrees)
        for (Degree dy : degrees) {
            ++r.samples;
            TorusElement x = TorusElement::monomial(dx), y = TorusElement::monomial(dy);
            TorusElement comm = x * y - y * x;
            // Commutators never touch the (even, even) degrees.
            if (!comm.even_even_part().is_zero()) {
                fail(r, comm.str());
                return r;
            }
            for (Degree d : comm.support()) reached.insert(d);
        }

    // Every non-(even, even) degree of the box is reached, so within the box
    // [Q, Q] is exactly the span of the non-(even, even) monomials.
    for (Degree d : degrees) {
        ++r.samples;
        if (!d.both_even() && !reached.contains(d)) {
            fail(r, TorusElement::monomial(d).str());
            return r;
        }
        TorusElement m = TorusElement::monomial(d);
        bool central = (m * i == i * m) && (m * j == j * m);
        if (central != d.both_even()) {
            fail(r, m.str());
            return r;
        }
    }
    return r;
}

VerificationReport torus_roundtrip(Context& ctx) {
    VerificationReport r = sampled("torus.roundtrip", ctx, ctx.cfg.box);
    SampleGen gen(ctx.cfg.seed);
    for (long n = 0; n < ctx.cfg.samples; ++n) {
        ++r.samples;
        TorusElement x = gen.torus_element(ctx.cfg.box);
        if (!(TorusElement::parse(x.str()) == x)) {
            fail(r, x.str());
            return r;
        }
    }
    return r;
}

// --------------------------------------------------------------- matrix ---

VerificationReport matrix_sl2_oracle(Context& ctx) {
    VerificationReport r = sampled("matrix.sl2_oracle", ctx, kOracleBox);
    Sl2Span span(kOracleBox);
    for (const Matrix2& x : monomial_matrices(kOracleBox)) {
        ++r.samples;
        if (is_in_sl2(x) != span.contains(x)) {
            fail(r, x.str());
            return r;
        }
    }
    return r;
}

VerificationReport matrix_trace_commutator(Context& ctx) {
    VerificationReport r = sampled("matrix.trace_commutator", ctx, ctx.cfg.box);
    SampleGen gen(ctx.cfg.seed);
    for (long n = 0; n < ctx.cfg.samples; ++n) {
        ++r.samples;
        Matrix2 x = gen.matrix(ctx.cfg.box), y = gen.matrix(ctx.cfg.box);
        TorusElement t = (x * y).trace() - (y * x).trace();
        if (!t.even_even_part().is_zero()) {
            fail(r, t.str());
            return r;
        }
    }
    return r;
}

VerificationReport matrix_jacobi(Context& ctx) {
    VerificationReport r = sampled("matrix.jacobi", ctx, ctx.cfg.box);
    SampleGen gen(ctx.cfg.seed);
    for (long n = 0; n < ctx.cfg.samples; ++n) {
        ++r.samples;
        Matrix2 x = gen.matrix(ctx.cfg.box), y = gen.matrix(ctx.cfg.box), z = gen.matrix(ctx.cfg.box);
        Matrix2 cyc = bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y));
        if (!cyc.is_zero()) {
            fail(r, cyc.str());
            return r;
        }
    }
    return r;
}

VerificationReport matrix_bracket_closure(Context& ctx) {
    VerificationReport r = sampled("matrix.bracket_closure", ctx, ctx.cfg.box);
    SampleGen gen(ctx.cfg.seed);
    for (long n = 0; n < ctx.cfg.samples; ++n) {
        ++r.samples;
        Matrix2 b = bracket(gen.matrix(ctx.cfg.box), gen.matrix(ctx.cfg.box));
        if (!is_in_sl2(b)) {
            fail(r, b.str());
            return r;
        }
    }
    return r;
}

// ----------------------------------------------------------------- form ---

VerificationReport form_symmetry(Context& ctx) {
    VerificationReport r = sampled("form.symmetry", ctx, ctx.cfg.box);
    SampleGen gen(ctx.cfg.seed);
    for (long n = 0; n < ctx.cfg.samples; ++n) {
        ++r.samples;
        LieTorusElement x = gen.lie_element(ctx.cfg.box), y = gen.lie_element(ctx.cfg.box);
        if (!(form_L(x, y) == form_L(y, x))) {
            fail(r, x.str());
            return r;
        }
    }
    return r;
}

VerificationReport form_invariance(Context& ctx) {
    VerificationReport r = sampled("form.invariance", ctx, ctx.cfg.box);
    SampleGen gen(ctx.cfg.seed);
    for (long n = 0; n < ctx.cfg.samples; ++n) {
        ++r.samples;
        LieTorusElement x = gen.lie_element(ctx.cfg.box), y = gen.lie_element(ctx.cfg.box),
                        z = gen.lie_element(ctx.cfg.box);
        if (!(form_L(bracket(x, y), z) == form_L(x, bracket(y, z)))) {
            fail(r, x.str());
            return r;
        }
    }
    return r;
}

VerificationReport form_graded_orthogonality(Context& ctx) {
    VerificationReport r = sampled("form.graded_orthogonality", ctx, ctx.cfg.box);
    std::vector<GradedBasisElement> basis = graded_basis(ctx.cfg.box);
    for (const auto& x : basis)
        for (const auto& y : basis) {
            bool paired = (x.index.degree + y.index.degree).is_zero() && x.index.root + y.index.root == 0;
            if (paired) continue;
            ++r.samples;
            if (!form_L(x.element, y.element).is_zero()) {
                fail(r, (x.element + y.element).str());
                return r;
            }
        }
    return r;
}

VerificationReport form_slice_nondegeneracy(Context& ctx) {
    VerificationReport r = sampled("form.slice_nondegeneracy", ctx, ctx.cfg.box);
    for (std::int32_t a = -ctx.cfg.box; a <= ctx.cfg.box; ++a)
        for (std::int32_t b = -ctx.cfg.box; b <= ctx.cfg.box; ++b)
            for (int root : {-2, 0, 2}) {
                ++r.samples;
                GradedIndex idx{root, Degree{a, b}};
                if (gram_determinant(idx).is_zero()) {
                    fail(r, slice_basis(idx).front().str());
                    return r;
                }
            }
    return r;
}

VerificationReport form_dimension_law(Context& ctx) {
    VerificationReport r = sampled("form.dimension_law", ctx, ctx.cfg.box);
    for (std::int32_t a = -ctx.cfg.box; a <= ctx.cfg.box; ++a)
        for (std::int32_t b = -ctx.cfg.box; b <= ctx.cfg.box; ++b) {
            Degree d{a, b};
            for (int root : {-2, 0, 2}) {
                ++r.samples;
                GradedIndex idx{root, d};
                std::size_t expected = root != 0 ? 1 : (d.both_even() ? 1 : 2);
                if (slice_basis(idx).size() != expected || slice_dimension(idx) != static_cast<int>(expected)) {
                    fail(r, slice_basis(idx).front().str());
                    return r;
                }
            }
        }
    return r;
}

VerificationReport form_e_symmetry(Context& ctx) {
    VerificationReport r = sampled("form.e_symmetry", ctx, ctx.cfg.box);
    SampleGen gen(ctx.cfg.seed);
    for (long n = 0; n < ctx.cfg.samples; ++n) {
        ++r.samples;
        EalaElement x = gen.eala_element(ctx.cfg.box), y = gen.eala_element(ctx.cfg.box);
        if (!(form_E(x, y) == form_E(y, x))) {
            fail(r, x.str());
            return r;
        }
    }
    return r;
}

VerificationReport form_e_invariance(Context& ctx) {
    VerificationReport r = sampled("form.e_invariance", ctx, ctx.cfg.box);
    SampleGen gen(ctx.cfg.seed);
    for (long n = 0; n < ctx.cfg.samples; ++n) {
        ++r.samples;
        EalaElement x = gen.eala_element(ctx.cfg.box), y = gen.eala_element(ctx.cfg.box),
                    z = gen.eala_element(ctx.cfg.box);
        if (!(form_E(bracket_E(x, y), z) == form_E(x, bracket_E(y, z)))) {
            fail(r, x.str());
            return r;
        }
    }
    return r;
}

VerificationReport form_e_cd_pairing(Context& ctx) {
    VerificationReport r = sampled("form.e_cd_pairing", ctx, 0);
    EalaElement c = EalaElement::central(), d = EalaElement::derivation();
    ScalarMatrix gram(2, 2);
    gram.at(0, 0) = form_E(c, c);
    gram.at(0, 1) = form_E(c, d);
    gram.at(1, 0) = form_E(d, c);
    gram.at(1, 1) = form_E(d, d);
    r.samples = 4;
    if (determinant(std::move(gram)).is_zero()) fail(r, c.str());
    return r;
}

// -------------------------------------------------------------- cocycle ---

VerificationReport cocycle_antisymmetry(Context& ctx) {
    VerificationReport r = sampled("cocycle.antisymmetry", ctx, ctx.cfg.box);
    SampleGen gen(ctx.cfg.seed);
    for (long n = 0; n < ctx.cfg.samples; ++n) {
        ++r.samples;
        LieTorusElement x = gen.lie_element(ctx.cfg.box), y = gen.lie_element(ctx.cfg.box);
        if (!(cocycle(x, y) == -cocycle(y, x)) || !cocycle(x, x).is_zero()) {
            fail(r, x.str());
            return r;
        }
    }
    return r;
}

VerificationReport cocycle_cyclic(Context& ctx) {
    VerificationReport r = sampled("cocycle.cyclic_identity", ctx, ctx.cfg.box);
    SampleGen gen(ctx.cfg.seed);
    for (long n = 0; n < ctx.cfg.samples; ++n) {
        ++r.samples;
        LieTorusElement x = gen.lie_element(ctx.cfg.box), y = gen.lie_element(ctx.cfg.box),
                        z = gen.lie_element(ctx.cfg.box);
        Scalar total = cocycle(bracket(x, y), z) + cocycle(bracket(y, z), x) + cocycle(bracket(z, x), y);
        if (!total.is_zero()) {
            fail(r, x.str());
            return r;
        }
    }
    return r;
}

// --------------------------------------------------------------- jacobi ---

VerificationReport jacobi_bracket_e(Context& ctx) {
    VerificationReport r = sampled("jacobi.bracket_e", ctx, ctx.cfg.box);
    SampleGen gen(ctx.cfg.seed);
    for (long n = 0; n < ctx.cfg.samples; ++n) {
        ++r.samples;
        EalaElement x = gen.eala_element(ctx.cfg.box), y = gen.eala_element(ctx.cfg.box),
                    z = gen.eala_element(ctx.cfg.box);
        EalaElement cyc = bracket_E(x, bracket_E(y, z)) + bracket_E(y, bracket_E(z, x)) +
                          bracket_E(z, bracket_E(x, y));
        if (!cyc.is_zero()) {
            fail(r, cyc.str());
            return r;
        }
    }
    return r;
}

VerificationReport jacobi_core_closure(Context& ctx) {
    VerificationReport r = sampled("jacobi.core_closure", ctx, ctx.cfg.box);
    SampleGen gen(ctx.cfg.seed);
    for (long n = 0; n < ctx.cfg.samples; ++n) {
        ++r.samples;
        EalaElement b = bracket_E(gen.eala_element(ctx.cfg.box), gen.eala_element(ctx.cfg.box));
        if (!b.d_coeff.is_zero()) {
            fail(r, b.str());
            return r;
        }
    }
    return r;
}

// -------------------------------------------------------------- section ---

VerificationReport section_box0_infeasible(Context& ctx) {
    VerificationReport r = sampled("section.box0_infeasible", ctx, 0);
    r.samples = 1;
    try {
        Section sec = solve_section(0);
        fail(r, sec.a().str());
    } catch (const BoxExhausted&) {
    }
    return r;
}

VerificationReport section_solve(Context& ctx) {
    VerificationReport r = sampled("section.solve", ctx, 0);
    const SectionSolve& s = ctx.solve();
    r.box = s.box;  // minimal feasible box, an empirical output
    r.samples = 1;
    TorusElement residual = apply_m(s.section.a(), s.section.b()) - TorusElement::one();
    if (!residual.is_zero()) fail(r, residual.str());
    return r;
}

VerificationReport section_fixture(Context& ctx) {
    VerificationReport r = sampled("section.fixture", ctx, 0);
    const SectionSolve& s = ctx.section();
    r.box = s.box;
    r.samples = 1;
    TorusElement residual = apply_m(s.section.a(), s.section.b()) - TorusElement::one();
    if (!residual.is_zero()) fail(r, residual.str());
    return r;
}

VerificationReport section_projection(Context& ctx) {
    VerificationReport r = sampled("section.projection", ctx, ctx.section().box);
    Matrix2 p = build_projection(ctx.section().section);
    ++r.samples;
    if (!(p * p == p)) {
        fail(r, (p * p - p).str());
        return r;
    }
    // m . p = m on both standard basis columns.
    TorusElement zero, one = TorusElement::one();
    for (int col = 0; col < 2; ++col) {
        ++r.samples;
        const TorusElement& u = col == 0 ? one : zero;
        const TorusElement& v = col == 0 ? zero : one;
        auto [pu, pv] = apply_matrix(p, u, v);
        if (!(apply_m(pu, pv) == apply_m(u, v))) {
            fail(r, p.str());
            return r;
        }
    }
    // p annihilates the kernel slice.
    for (const auto& [w1, w2] : kernel_basis(kCenterBox)) {
        ++r.samples;
        auto [pu, pv] = apply_matrix(p, w1, w2);
        if (!pu.is_zero() || !pv.is_zero()) {
            Matrix2 w;
            w.at(0, 0) = w1;
            w.at(1, 0) = w2;
            fail(r, w.str());
            return r;
        }
    }
    return r;
}

// ------------------------------------------------------------- spectrum ---

VerificationReport spectrum_involution(Context& ctx) {
    VerificationReport r = sampled("spectrum.s_involution", ctx, ctx.section().box);
    const SElement& s = ctx.S();
    ++r.samples;
    if (!(s.matrix() * s.matrix() == Matrix2::identity())) {
        fail(r, s.matrix().str());
        return r;
    }
    // S = -1 on the kernel slice of m, +1 on the image of the section.
    for (const auto& [w1, w2] : kernel_basis(kCenterBox)) {
        ++r.samples;
        auto [su, sv] = apply_matrix(s.matrix(), w1, w2);
        if (!(su == -w1) || !(sv == -w2)) {
            Matrix2 w;
            w.at(0, 0) = w1;
            w.at(1, 0) = w2;
            fail(r, w.str());
            return r;
        }
    }
    ++r.samples;
    const Section& sec = ctx.section().section;
    auto [qu, qv] = apply_matrix(s.matrix(), sec.a(), sec.b());
    if (!(qu == sec.a()) || !(qv == sec.b())) {
        fail(r, s.matrix().str());
        return r;
    }
    return r;
}

VerificationReport spectrum_s_in_sl2(Context& ctx) {
    VerificationReport r = sampled("spectrum.s_in_sl2", ctx, kOracleBox);
    const SElement& s = ctx.S();
    r.samples = 2;
    if (!is_in_sl2(s.matrix())) {
        fail(r, s.matrix().str());
        return r;
    }
    // Cross-check with the independent commutator-span oracle.
    if (!sl2_membership_bruteforce(s.matrix(), kOracleBox)) fail(r, s.matrix().str());
    return r;
}

VerificationReport spectrum_ad_cubic(Context& ctx) {
    VerificationReport r = ad_cubic_check(ctx.S(), ctx.cfg.box);
    r.seed = ctx.cfg.seed;
    return r;
}

VerificationReport spectrum_eigenprojections(Context& ctx) {
    VerificationReport r = sampled("spectrum.eigenprojections", ctx, ctx.cfg.box);
    const SElement& s = ctx.S();
    for (const auto& [idx, el] : graded_basis(ctx.cfg.box)) {
        ++r.samples;
        LieTorusElement p0 = eigenprojection(s, 0, el);
        LieTorusElement p2 = eigenprojection(s, 2, el);
        LieTorusElement pm2 = eigenprojection(s, -2, el);
        bool ok = p0 + p2 + pm2 == el;
        ok = ok && eigenprojection(s, 0, p0) == p0 && eigenprojection(s, 2, p2) == p2 &&
             eigenprojection(s, -2, pm2) == pm2;
        ok = ok && eigenprojection(s, 2, p0).is_zero() && eigenprojection(s, 0, p2).is_zero() &&
             eigenprojection(s, -2, p2).is_zero();
        ok = ok && s.ad(p2) == Scalar(2) * p2 && s.ad(pm2) == Scalar(-2) * pm2 && s.ad(p0).is_zero();
        if (!ok) {
            fail(r, el.str());
            return r;
        }
    }
    return r;
}

VerificationReport spectrum_mad_eigenvectors(Context& ctx) {
    VerificationReport r = sampled("spectrum.mad_eigenvectors", ctx, ctx.cfg.box);
    StandardMad mad;
    Theta theta;
    for (const auto& [idx, el] : graded_basis(ctx.cfg.box)) {
        ++r.samples;
        auto [alpha, beta] = simultaneous_eigenvalues(el, mad, theta);
        if (!(alpha == Scalar(idx.root) * mad.generator_scale()) || !(beta == theta(idx.degree))) {
            fail(r, el.str());
            return r;
        }
    }
    return r;
}

// --------------------------------------------------------------- lemmas ---

VerificationReport lemmas_y0_zero(Context& ctx) {
    VerificationReport r = sampled("lemmas.y0_zero", ctx, ctx.section().box);
    r.samples = 1;
    try {
        const YDecomposition& yd = ctx.Y();
        if (!(yd.y0 + yd.y2 + yd.ym2 == yd.y)) fail(r, yd.y.str());
    } catch (const Y0NonZero& e) {
        fail(r, e.what());
    }
    return r;
}

VerificationReport lemmas_d_prime(Context& ctx) {
    VerificationReport r = sampled("lemmas.d_prime_commutes", ctx, ctx.section().box);
    r.samples = 1;
    try {
        EalaElement b = bracket_E(ctx.S().as_eala(), ctx.d_prime().element);
        if (!b.is_zero()) fail(r, b.str());
    } catch (const DPrimeBracketNonZero& e) {
        fail(r, e.what());
    }
    return r;
}

VerificationReport lemmas_central_term(Context& ctx) {
    VerificationReport r = sampled("lemmas.central_term", ctx, ctx.section().box);
    r.samples = 1;
    const YDecomposition& yd = ctx.Y();
    Scalar value = cocycle(ctx.S().element(), yd.ym2 - yd.y2);
    if (!value.is_zero()) fail(r, yd.y.str());
    return r;
}

VerificationReport lemmas_abelian_seed(Context& ctx) {
    VerificationReport r = abelian_seed_check(ctx.S(), ctx.d_prime());
    r.seed = ctx.cfg.seed;
    r.box = ctx.section().box;
    return r;
}

VerificationReport lemmas_lemma1(Context& ctx) {
    long pairs = std::max<long>(200, ctx.cfg.samples);
    return lemma1_cocycle_check(ctx.S(), ctx.cfg.box, pairs, ctx.cfg.seed);
}

// ---------------------------------------------------------------- probe ---

std::vector<VerificationReport> probe_all_boxes(Context& ctx) {
    std::vector<VerificationReport> out;
    for (int b = 0; b <= ctx.cfg.box; ++b) {
        auto t0 = std::chrono::steady_clock::now();
        VerificationReport r = nonfreeness_probe(b);
        r.seed = ctx.cfg.seed;
        r.duration_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - t0)
                            .count();
        out.push_back(std::move(r));
    }
    return out;
}

const std::vector<Check>& registry() {
    static const std::vector<Check> checks = {
        {Suite::torus, "torus.relations", torus_relations},
        {Suite::torus, "torus.associativity", torus_associativity},
        {Suite::torus, "torus.grading", torus_grading},
        {Suite::torus, "torus.conjugation", torus_conjugation},
        {Suite::torus, "torus.monomial_inverse", torus_monomial_inverse},
        {Suite::torus, "torus.center_span", torus_center_span},
        {Suite::torus, "torus.roundtrip", torus_roundtrip},
        {Suite::matrix, "matrix.sl2_oracle", matrix_sl2_oracle},
        {Suite::matrix, "matrix.trace_commutator", matrix_trace_commutator},
        {Suite::matrix, "matrix.jacobi", matrix_jacobi},
        {Suite::matrix, "matrix.bracket_closure", matrix_bracket_closure},
        {Suite::form, "form.symmetry", form_symmetry},
        {Suite::form, "form.invariance", form_invariance},
        {Suite::form, "form.graded_orthogonality", form_graded_orthogonality},
        {Suite::form, "form.slice_nondegeneracy", form_slice_nondegeneracy},
        {Suite::form, "form.dimension_law", form_dimension_law},
        {Suite::form, "form.e_symmetry", form_e_symmetry},
        {Suite::form, "form.e_invariance", form_e_invariance},
        {Suite::form, "form.e_cd_pairing", form_e_cd_pairing},
        {Suite::cocycle, "cocycle.antisymmetry", cocycle_antisymmetry},
        {Suite::cocycle, "cocycle.cyclic_identity", cocycle_cyclic},
        {Suite::jacobi, "jacobi.bracket_e", jacobi_bracket_e},
        {Suite::jacobi, "jacobi.core_closure", jacobi_core_closure},
        {Suite::section, "section.box0_infeasible", section_box0_infeasible},
        {Suite::section, "section.solve", section_solve},
        {Suite::section, "section.fixture", section_fixture},
        {Suite::section, "section.projection", section_projection},
        {Suite::spectrum, "spectrum.s_involution", spectrum_involution},
        {Suite::spectrum, "spectrum.s_in_sl2", spectrum_s_in_sl2},
        {Suite::spectrum, "spectrum.ad_cubic", spectrum_ad_cubic},
        {Suite::spectrum, "spectrum.eigenprojections", spectrum_eigenprojections},
        {Suite::spectrum, "spectrum.mad_eigenvectors", spectrum_mad_eigenvectors},
        {Suite::lemmas, "lemmas.y0_zero", lemmas_y0_zero},
        {Suite::lemmas, "lemmas.d_prime_commutes", lemmas_d_prime},
        {Suite::lemmas, "lemmas.central_term", lemmas_central_term},
        {Suite::lemmas, "lemmas.abelian_seed", lemmas_abelian_seed},
        {Suite::lemmas, "lemmas.lemma1_identity", lemmas_lemma1},
    };
    return checks;
}

}  // namespace

std::optional<Suite> suite_from_name(std::string_view name) {
    static const std::map<std::string_view, Suite> names = {
        {"torus", Suite::torus},     {"matrix", Suite::matrix},   {"form", Suite::form},
        {"cocycle", Suite::cocycle}, {"jacobi", Suite::jacobi},   {"section", Suite::section},
        {"spectrum", Suite::spectrum}, {"lemmas", Suite::lemmas}, {"probe", Suite::probe},
        {"all", Suite::all},
    };
    auto it = names.find(name);
    return it == names.end() ? std::nullopt : std::optional<Suite>(it->second);
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"torus",   "matrix",   "form",   "cocycle", "jacobi",
                                                   "section", "spectrum", "lemmas", "probe",   "all"};
    return names;
}

std::vector<VerificationReport> run_suite(const SuiteConfig& config, const std::set<Suite>& selection) {
    if (config.box < 0) throw ConfigError("box must be >= 0");
    if (config.samples < 1) throw ConfigError("samples must be >= 1");
    if (selection.empty()) throw ConfigError("no suites selected");
    if (config.regenerate_fixture && !config.fixture_path)
        throw ConfigError("--regenerate-section-fixture needs a fixture path");

    const bool run_all = selection.contains(Suite::all);
    auto selected = [&](Suite s) { return run_all || selection.contains(s); };

    Context ctx{config, {}, {}, {}, {}, {}};
    std::vector<VerificationReport> reports;
    for (const Check& check : registry()) {
        if (!selected(check.suite)) continue;
        if (check.id == std::string_view("section.fixture") && !config.fixture_path &&
            !config.regenerate_fixture)
            continue;  // nothing to attest without a configured fixture
        auto t0 = std::chrono::steady_clock::now();
        VerificationReport r = check.run(ctx);
        r.duration_ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0)
                .count();
        reports.push_back(std::move(r));
    }
    if (selected(Suite::probe)) {
        for (auto& r : probe_all_boxes(ctx)) reports.push_back(std::move(r));
    }
    return reports;
}

}  // namespace eala
