#pragma once

#include "eala/report.hpp"

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace eala {

enum class Suite { torus, matrix, form, cocycle, jacobi, section, spectrum, lemmas, probe, all };

std::optional<Suite> suite_from_name(std::string_view name);
const std::vector<std::string>& suite_names();

struct SuiteConfig {
    int box = 3;
    long samples = 1000;
    std::uint64_t seed = 1;
    std::optional<std::string> output_path;
    ReportFormat format = ReportFormat::text;
    std::optional<std::string> fixture_path;
    bool regenerate_fixture = false;
};

/// Runs the selected suites in registry order (section before spectrum
/// before lemmas), one VerificationReport per check. Configuration errors
/// throw ConfigError before any check executes.
std::vector<VerificationReport> run_suite(const SuiteConfig& config, const std::set<Suite>& selection);

}  // namespace eala
