#include <doctest.h>

#include <cstdlib>
#include <json.hpp>

#include "superflag/verify/suites.hpp"

using namespace superflag::verify;

namespace {

std::size_t config_error_line(const std::string& text) {
  try {
    parse_config(text);
  } catch (const ConfigError& e) {
    return e.line;
  }
  return 0;
}

void zero_durations(std::vector<SuiteReport>& reports) {
  for (auto& r : reports) r.duration_seconds = 0;
}

const CheckRecord* find_check(const SuiteReport& r, const std::string& id) {
  for (const auto& c : r.checks)
    if (c.id == id) return &c;
  return nullptr;
}

}  // namespace

TEST_CASE("config parsing") {
  const RunConfig c = parse_config("# comment\nsuites = bwb, action\n\nmax_size = 2  # trailing\nseed = 7\n");
  CHECK(c.suites == std::vector<std::string>{"bwb", "action"});
  CHECK(c.max_size == 2);
  CHECK(c.seed == 7);
  CHECK(c.jacobi_max == RunConfig{}.jacobi_max);
  CHECK(config_error_line("suites = bwb\nmax_size 2\n") == 2);
  CHECK(config_error_line("\n\nsuites = nothing\n") == 3);
  CHECK(config_error_line("colour = red\n") == 1);
  CHECK(config_error_line("max_size = -1\n") == 1);
  CHECK(config_error_line("max_size = two\n") == 1);
  CHECK(config_error_line("seed = 3\n") == 0);
}

TEST_CASE("size bound from the environment") {
  unsetenv("SUPERFLAG_MAX_SIZE");
  CHECK(max_size_from_env() == 3);
  setenv("SUPERFLAG_MAX_SIZE", "1", 1);
  CHECK(max_size_from_env() == 1);
  CHECK_THROWS_AS(suite_isotropy(2, 1), SizeLimitError);
  setenv("SUPERFLAG_MAX_SIZE", "zero", 1);
  CHECK_THROWS_AS(max_size_from_env(), std::invalid_argument);
  unsetenv("SUPERFLAG_MAX_SIZE");
}

TEST_CASE("single suites pass") {
  CHECK(suite_osp_defining(1, 1, true).passed());
  CHECK(suite_osp_defining(0, 1, false).passed());
  CHECK(suite_lemma_fields(2, 1, {1}, {0}).passed());
  CHECK(suite_isotropy(1, 1).passed());
  CHECK(suite_bwb(3, 2).passed());
  CHECK(suite_isomorphism(1, 1, true).passed());
  CHECK(suite_imP_witness(1, 1).passed());
  CHECK(suite_action(1, 2).passed());
}

TEST_CASE("every check carries an anchor") {
  for (const auto& r : {suite_osp_defining(1, 1, false), suite_bwb(1, 2), suite_imP_witness(2, 1)})
    for (const auto& c : r.checks) CHECK_FALSE(c.anchor.empty());
}

TEST_CASE("witness of the odd-odd bracket") {
  const SuiteReport r = suite_imP_witness(1, 1);
  const CheckRecord* display = find_check(r, "bracket");
  REQUIRE(display != nullptr);
  CHECK(display->status == Status::pass);
  const CheckRecord* outside = find_check(r, "bracket-outside-image");
  REQUIRE(outside != nullptr);
  CHECK(outside->status == Status::pass);
  CHECK(outside->witness.find("a1_1_1*b2_1_1") != std::string::npos);
}

TEST_CASE("json report") {
  std::vector<SuiteReport> reports{suite_bwb(2, 1), suite_bwb(1, 1)};
  const auto doc = nlohmann::json::parse(render_json(reports));
  CHECK(doc.at("schema") == "superflag-report/1");
  CHECK(doc.at("status") == "pass");
  REQUIRE(doc.at("suites").size() == 2);
  const auto& s = doc.at("suites")[0];
  CHECK(s.at("suite") == "bwb");
  CHECK(s.at("params").at("k1") == "2");
  for (const auto& c : s.at("checks")) {
    CHECK(c.contains("id"));
    CHECK(c.contains("anchor"));
    CHECK(c.contains("witness"));
    CHECK(c.at("status") == "pass");
  }
  SuiteReport failing;
  failing.suite = "demo";
  failing.add("x", "anchor", false, "w");
  CHECK_FALSE(failing.passed());
  CHECK(nlohmann::json::parse(render_json({failing})).at("status") == "fail");
  CHECK(render_text(failing, false).find("0/1") != std::string::npos);
}

TEST_CASE("reports are deterministic") {
  RunConfig c;
  c.suites = {"bwb", "imp-witness", "action"};
  c.max_size = 2;
  c.action_samples = 3;
  auto a = run_all(c);
  auto b = run_all(c);
  zero_durations(a);
  zero_durations(b);
  CHECK(render_json(a) == render_json(b));
}
