#include "fppq/report.hpp"

#include <cstdlib>
#include <sstream>

#ifndef FPPQ_DEFAULT_FIXTURE_DIR
#define FPPQ_DEFAULT_FIXTURE_DIR "tests/fixtures"
#endif

namespace fppq {

std::string fixture_directory() {
    if (const char* env = std::getenv("FPPQ_FIXTURE_DIR")) return env;
    return FPPQ_DEFAULT_FIXTURE_DIR;
}

Json report_json(const VerificationReport& report) {
    Json j;
    j["name"] = report.name;
    j["claim"] = report.claim;
    j["status"] = report.pass ? "pass" : "fail";
    j["elapsed_ms"] = report.elapsed_ms;
    j["assertions"] = report.assertions;
    if (!report.data.empty()) j["data"] = report.data;
    if (!report.failures.empty()) j["failures"] = report.failures;
    return j;
}

Json aggregate_json(const std::vector<VerificationReport>& reports) {
    Json j;
    j["schema"] = "fppq.report/1";
    bool all = true;
    for (const auto& r : reports) all = all && r.pass;
    j["status"] = all ? "pass" : "fail";
    j["checks"] = Json::array();
    for (const auto& r : reports) j["checks"].push_back(report_json(r));
    return j;
}

std::string render_text(const VerificationReport& report) {
    std::ostringstream os;
    os << "== " << report.name << ": " << report.claim << "\n";
    for (const auto& a : report.assertions) {
        os << "  [" << (a.at("pass").get<bool>() ? "ok" : "FAIL") << "] "
           << a.at("what").get<std::string>();
        if (a.contains("computed"))
            os << "  computed=" << a.at("computed").dump()
               << " expected=" << a.at("expected").dump();
        os << "\n";
    }
    os << (report.pass ? "PASS" : "FAIL") << " " << report.name << " ("
       << report.assertions.size() << " assertions)\n";
    return os.str();
}

}  // namespace fppq
