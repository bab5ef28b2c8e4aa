#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace eala {

enum class CheckStatus { pass, fail, not_falsified };

std::string to_string(CheckStatus s);

/// One verification certificate: which check ran, with what parameters, and
/// the exact outcome. `witness` is present exactly when status is fail and
/// holds canonical element text that the element parsers accept.
struct VerificationReport {
    std::string check_id;
    CheckStatus status = CheckStatus::pass;
    int box = 0;
    long samples = 0;
    std::uint64_t seed = 0;
    std::optional<std::string> witness;
    long duration_ms = 0;
};

enum class ReportFormat { text, json };

/// JSON: a top-level array of objects with keys check_id, status, box,
/// samples, seed, witness (when present), duration_ms — in that order.
/// duration_ms is pinned to 0 in JSON so reports are byte-reproducible;
/// the text format carries the measured wall-clock value.
std::string render(const std::vector<VerificationReport>& reports, ReportFormat format);

/// Writes to `path` or, without one, to stdout. Throws ReportWriteError.
void emit_report(const std::vector<VerificationReport>& reports, ReportFormat format,
                 const std::optional<std::string>& path);

inline bool any_failed(const std::vector<VerificationReport>& reports) {
    for (const auto& r : reports)
        if (r.status == CheckStatus::fail) return true;
    return false;
}

}  // namespace eala
