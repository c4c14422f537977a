#include "superflag/verify/report.hpp"

#include <json.hpp>
#include <sstream>

#ifndef SUPERFLAG_VERSION
#define SUPERFLAG_VERSION "0.0.0"
#endif

namespace superflag::verify {

const char* tool_version() { return SUPERFLAG_VERSION; }

bool SuiteReport::passed() const {
  for (const auto& c : checks)
    if (c.status == Status::fail) return false;
  return true;
}

void SuiteReport::add(std::string id, std::string anchor, bool ok, std::string witness) {
  checks.push_back({std::move(id), std::move(anchor), ok ? Status::pass : Status::fail, std::move(witness)});
}

SuiteTimer::~SuiteTimer() {
  report_.duration_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
}

std::string render_text(const SuiteReport& r, bool verbose) {
  std::ostringstream out;
  out << "suite " << r.suite;
  for (const auto& [k, v] : r.params) out << " " << k << "=" << v;
  out << "\n";
  std::size_t failed = 0;
  for (const auto& c : r.checks) {
    const bool ok = c.status == Status::pass;
    if (!ok) ++failed;
    if (!ok || verbose) {
      out << "  [" << (ok ? "pass" : "FAIL") << "] " << c.id << " (" << c.anchor << ")";
      if (!c.witness.empty()) out << ": " << c.witness;
      out << "\n";
    }
  }
  out << "  " << (r.checks.size() - failed) << "/" << r.checks.size() << " checks passed\n";
  return out.str();
}

std::string render_json(const std::vector<SuiteReport>& reports) {
  nlohmann::ordered_json doc;
  doc["schema"] = kReportSchema;
  doc["version"] = tool_version();
  bool all = true;
  auto& suites = doc["suites"] = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    nlohmann::ordered_json s;
    s["suite"] = r.suite;
    s["params"] = r.params;
    s["status"] = r.passed() ? "pass" : "fail";
    s["duration_seconds"] = r.duration_seconds;
    auto& checks = s["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : r.checks)
      checks.push_back({{"id", c.id},
                        {"anchor", c.anchor},
                        {"status", c.status == Status::pass ? "pass" : "fail"},
                        {"witness", c.witness}});
    all = all && r.passed();
    suites.push_back(std::move(s));
  }
  doc["status"] = all ? "pass" : "fail";
  return doc.dump(2) + "\n";
}

}  // namespace superflag::verify
