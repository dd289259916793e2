#pragma once

#include <json.hpp>

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace fppq {

using Json = nlohmann::ordered_json;

/// Result of one named verification: a claim, a pass/fail status, and the
/// individual assertions with their computed and expected values.
struct VerificationReport {
    std::string name;
    std::string claim;
    bool pass = true;
    Json assertions = Json::array();
    Json data = Json::object();
    std::vector<std::string> failures;
    double elapsed_ms = 0.0;
};

struct CheckOptions {
    std::optional<int> m;        // exclude: restrict to one case
    std::optional<long long> n;  // fibres: restrict to one n
    bool emit_list = false;      // exclude: attach the full stage-1 list
    std::string fixture_dir;     // empty: resolve via fixture_directory()
};

/// FPPQ_FIXTURE_DIR environment override, else the compiled-in default.
std::string fixture_directory();

struct CheckDef {
    std::string name;
    std::string claim;
    std::function<VerificationReport(const CheckOptions&)> fn;
};

/// All checks, ordered by name.
const std::vector<CheckDef>& check_registry();

/// Throws std::invalid_argument for an unknown name.
VerificationReport run_check(const std::string& name, const CheckOptions& opts = {});
std::vector<VerificationReport> run_all(const CheckOptions& opts = {});

Json report_json(const VerificationReport& report);
Json aggregate_json(const std::vector<VerificationReport>& reports);
std::string render_text(const VerificationReport& report);

}  // namespace fppq
