#pragma once

#include <chrono>
#include <map>
#include <string>
#include <vector>

namespace superflag::verify {

inline constexpr const char* kReportSchema = "superflag-report/1";

const char* tool_version();

enum class Status { pass, fail };

struct CheckRecord {
  std::string id;
  std::string anchor;  // the statement this check witnesses
  Status status = Status::pass;
  std::string witness;
};

struct SuiteReport {
  std::string suite;
  std::map<std::string, std::string> params;
  std::vector<CheckRecord> checks;
  double duration_seconds = 0;

  bool passed() const;
  void add(std::string id, std::string anchor, bool ok, std::string witness);
};

/// Measures wall-clock time into a report on destruction.
class SuiteTimer {
 public:
  explicit SuiteTimer(SuiteReport& r) : report_(r), start_(std::chrono::steady_clock::now()) {}
  ~SuiteTimer();
  SuiteTimer(const SuiteTimer&) = delete;
  SuiteTimer& operator=(const SuiteTimer&) = delete;

 private:
  SuiteReport& report_;
  std::chrono::steady_clock::time_point start_;
};

/// Human-readable rendering, one line per check plus a suite summary.
std::string render_text(const SuiteReport& r, bool verbose);

/// JSON document for a list of suite reports.
std::string render_json(const std::vector<SuiteReport>& reports);

}  // namespace superflag::verify
