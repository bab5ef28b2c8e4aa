#include "eala/report.hpp"

#include "eala/exceptions.hpp"

#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace eala {

std::string to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::not_falsified: return "not-falsified";
    }
    return "?";
}

namespace {

std::string render_text(const std::vector<VerificationReport>& reports) {
    std::ostringstream os;
    for (const auto& r : reports) {
        os << '[' << to_string(r.status) << "] " << r.check_id << " box=" << r.box
           << " samples=" << r.samples << " seed=" << r.seed << " (" << r.duration_ms << " ms)";
        if (r.witness) os << " witness: " << *r.witness;
        os << '\n';
    }
    return os.str();
}

std::string render_json(const std::vector<VerificationReport>& reports) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : reports) {
        nlohmann::ordered_json obj;
        obj["check_id"] = r.check_id;
        obj["status"] = to_string(r.status);
        obj["box"] = r.box;
        obj["samples"] = r.samples;
        obj["seed"] = r.seed;
        if (r.witness) obj["witness"] = *r.witness;
        obj["duration_ms"] = 0;  // byte-reproducible reports; timing lives in the text format
        arr.push_back(std::move(obj));
    }
    return arr.dump(2) + "\n";
}

}  // namespace

std::string render(const std::vector<VerificationReport>& reports, ReportFormat format) {
    return format == ReportFormat::json ? render_json(reports) : render_text(reports);
}

void emit_report(const std::vector<VerificationReport>& reports, ReportFormat format,
                 const std::optional<std::string>& path) {
    std::string body = render(reports, format);
    if (!path) {
        std::cout << body;
        return;
    }
    std::ofstream os(*path, std::ios::binary);
    if (!os) throw ReportWriteError(*path);
    os << body;
    if (!os) throw ReportWriteError(*path);
}

}  // namespace eala
