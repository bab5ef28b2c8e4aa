#include "eala/exceptions.hpp"
#include "eala/report.hpp"
#include "eala/suites.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <set>
#include <string>
#include <vector>

int main(int argc, char** argv) {
    CLI::App app{"Exact verification suites for the quaternion-torus extended affine Lie algebra"};

    std::vector<std::string> suite_args;
    eala::SuiteConfig config;
    std::string format = "text";
    std::string report_path;
    std::string fixture_path;

    app.add_option("suites", suite_args,
                   "Suites to run: torus matrix form cocycle jacobi section spectrum lemmas probe all")
        ->required();
    app.add_option("--box", config.box, "Degree box half-width for sweeps and the probe")
        ->capture_default_str();
    app.add_option("--samples", config.samples, "Random samples per property check")
        ->capture_default_str();
    app.add_option("--seed", config.seed, "Seed for the deterministic sample generator")
        ->capture_default_str();
    app.add_option("--report", report_path, "Write the report to this path instead of stdout");
    app.add_option("--format", format, "Report format: text or json")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("--section-fixture", fixture_path,
                   "Path of the pinned section fixture; loaded and residual-checked when present");
    app.add_flag("--regenerate-section-fixture", config.regenerate_fixture,
                 "Recompute the section and rewrite the fixture before running");

    CLI11_PARSE(app, argc, argv);

    try {
        std::set<eala::Suite> selection;
        for (const std::string& name : suite_args) {
            auto suite = eala::suite_from_name(name);
            if (!suite) throw eala::ConfigError("unknown suite '" + name + "'");
            selection.insert(*suite);
        }
        config.format = format == "json" ? eala::ReportFormat::json : eala::ReportFormat::text;
        if (!report_path.empty()) config.output_path = report_path;
        if (!fixture_path.empty()) config.fixture_path = fixture_path;

        std::vector<eala::VerificationReport> reports = eala::run_suite(config, selection);
        eala::emit_report(reports, config.format, config.output_path);
        return eala::any_failed(reports) ? 1 : 0;
    } catch (const eala::ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
