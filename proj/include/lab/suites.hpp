#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "lab/core_arith.hpp"

namespace lab {

inline constexpr const char* kReportSchema = "verify-report/1";

struct RunConfig {
    std::vector<i64> primes{3, 5, 7, 11, 13};
    int order = 200;
    double tol = 1e-8;
    double radius2 = 0;  // 0: from the tail bound
    int samples = 3;     // sample points for numerical suites
    std::string out;
    std::vector<std::string> suites;
};

// throws std::invalid_argument on a bad prime, order or tolerance
void validate(const RunConfig& c);

struct Report {
    std::string suite;
    std::string anchor;
    std::string status;  // pass | fail | measured
    double residual = 0;
    double runtime = 0;  // seconds
    nlohmann::json details = nlohmann::json::object();
};

const std::vector<std::string>& suite_names();
std::vector<Report> run_suite(const std::string& name, const RunConfig& c);
std::vector<Report> run(const RunConfig& c);
bool any_failed(const std::vector<Report>& reports);

nlohmann::json to_json(const Report& r);
nlohmann::json report_document(const RunConfig& c, const std::vector<Report>& reports);
nlohmann::json gauss_json(const GaussInt& z);

}  // namespace lab
