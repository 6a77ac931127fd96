#include "ew/verify.hpp"
#include "ew/error.hpp"

#include "CLI11.hpp"

#include <chrono>
#include <fstream>
#include <iostream>

// One PASS/FAIL line per acceptance criterion; exit code 1 when any line is FAIL.
int main(int argc, char** argv) {
    ew::VerifyConfig config;
    config.data_dir = ew::default_data_dir();
    std::string report;
    CLI::App app{"acceptance criteria"};
    app.add_option("--only", config.only, "criterion ids")->delimiter(',');
    app.add_option("--data-dir", config.data_dir, "data directory");
    app.add_option("--report", report, "write the JSON report to this file");
    CLI11_PARSE(app, argc, argv);

    auto start = std::chrono::steady_clock::now();
    std::vector<ew::CheckResult> results;
    try {
        results = ew::run_verification(config);
    } catch (const ew::Error& e) {
        std::cerr << "error " << ew::error_name(e.code()) << ": " << e.what() << "\n";
        return 2;
    }
    bool all = true;
    for (const auto& r : results) {
        all = all && r.pass;
        std::cout << (r.pass ? "PASS " : "FAIL ") << r.id << " [" << r.anchor << "] " << r.witness << "\n";
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    std::cout << results.size() << " criteria, " << ms.count() << " ms\n";
    if (!report.empty()) {
        std::ofstream out(report);
        out << ew::verification_report(results).dump(1) << "\n";
        if (!out) {
            std::cerr << "error IO: cannot write " << report << "\n";
            return 1;
        }
    }
    return all ? 0 : 1;
}
