#include "eala/probe.hpp"

#include "eala/exceptions.hpp"
#include "eala/linear.hpp"
#include "eala/section.hpp"

#include <map>

namespace eala {

namespace {

using KernelColumn = std::pair<TorusElement, TorusElement>;

// Row index: component (0 or 1) x product degree.
struct RowIndex {
    std::map<Degree, std::size_t> at;
    std::size_t count = 0;

    std::size_t row(int component, Degree d) const { return component * count + at.at(d); }
};

std::vector<Scalar> stack_column(const KernelColumn& col, const RowIndex& rows) {
    std::vector<Scalar> v(2 * rows.count, Scalar(0));
    for (const auto& [d, c] : col.first.terms()) v[rows.row(0, d)] = c;
    for (const auto& [d, c] : col.second.terms()) v[rows.row(1, d)] = c;
    return v;
}

}  // namespace

VerificationReport nonfreeness_probe(int box) {
    if (box < 0) throw ConfigError("probe box must be >= 0");
    VerificationReport report;
    report.check_id = "probe.nonfreeness";
    report.status = CheckStatus::not_falsified;
    report.box = box;

    std::vector<KernelColumn> basis = kernel_basis(box);
    report.samples = static_cast<long>(basis.size());
    if (basis.empty()) return report;  // the box slice of W is trivial

    // Product degrees: candidate support + multiplier window.
    RowIndex rows;
    const std::int32_t reach = 3 * box;
    for (std::int32_t a = -reach; a <= reach; ++a)
        for (std::int32_t b = -reach; b <= reach; ++b) rows.at.emplace(Degree{a, b}, rows.count++);

    std::vector<Degree> window;
    for (std::int32_t a = -2 * box; a <= 2 * box; ++a)
        for (std::int32_t b = -2 * box; b <= 2 * box; ++b) window.push_back({a, b});

    std::vector<std::vector<Scalar>> targets;
    targets.reserve(basis.size());
    for (const auto& col : basis) targets.push_back(stack_column(col, rows));

    for (const auto& candidate : basis) {
        // Columns of the generation system: candidate * monomial(e).
        ScalarMatrix system(2 * rows.count, window.size());
        for (std::size_t j = 0; j < window.size(); ++j) {
            TorusElement mono = TorusElement::monomial(window[j]);
            TorusElement top = candidate.first * mono;
            TorusElement bottom = candidate.second * mono;
            for (const auto& [d, c] : top.terms()) system.at(rows.row(0, d), j) = c;
            for (const auto& [d, c] : bottom.terms()) system.at(rows.row(1, d), j) = c;
        }
        std::vector<bool> generated = consistent_many(std::move(system), targets);
        bool all = true;
        for (bool g : generated) all = all && g;
        if (all) {
            report.status = CheckStatus::fail;  // FALSIFIED: would contradict non-freeness
            Matrix2 w;
            w.at(0, 0) = candidate.first;
            w.at(1, 0) = candidate.second;
            report.witness = w.str();
            return report;
        }
    }
    return report;
}

}  // namespace eala
