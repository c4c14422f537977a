#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "superflag/flag_charts.hpp"
#include "superflag/osp_algebra.hpp"
#include "superflag/root_weights.hpp"
#include "superflag/verify/report.hpp"
#include "superflag/verify/suites.hpp"

using namespace superflag;

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

OspFlavor parse_flavor(const std::string& s) {
  if (s == "odd") return OspFlavor::odd;
  if (s == "even") return OspFlavor::even;
  if (s == "primed") return OspFlavor::primed;
  throw UsageError("unknown flavor '" + s + "' (odd, even, primed)");
}

void cap(std::size_t value, std::size_t bound, const std::string& what) {
  if (value > bound)
    throw verify::SizeLimitError(what + " = " + std::to_string(value) + " exceeds the size bound " +
                                 std::to_string(bound) + " (SUPERFLAG_MAX_SIZE)");
}

/// Flags may live in ambient dimensions up to those of the maximal isotropic
/// type at the size bound.
void cap_flag(const FlagType& ft) {
  const std::size_t b = verify::max_size_from_env();
  cap(ft.m(), 2 * b + 1, "m");
  cap(ft.n(), 2 * b, "n");
}

/// Accepts "I1=2;2" as well as "2;2".
IndexSet parse_index_arg(const std::string& text) {
  const auto eq = text.find('=');
  return parse_index_set(eq == std::string::npos ? text : text.substr(eq + 1));
}

std::vector<IndexSet> index_sets_or_default(const FlagType& ft, const std::vector<std::string>& args) {
  if (args.empty()) return default_index_sets(ft);
  std::vector<IndexSet> out;
  for (const auto& a : args) out.push_back(parse_index_arg(a));
  return out;
}

std::string matrix_argument(const std::string& inline_text, const std::string& file) {
  if (!file.empty()) {
    std::ifstream in(file);
    if (!in) throw UsageError("cannot read " + file);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  if (inline_text.empty()) throw UsageError("a matrix is required (--matrix or --matrix-file)");
  return inline_text;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact orthosymplectic superalgebra and flag supermanifold toolkit"};
  app.set_version_flag("--version", verify::tool_version());
  app.require_subcommand(1);

  // osp-basis
  std::string flavor = "odd";
  std::size_t m = 1, n = 1;
  bool show_matrices = false;
  auto* osp_cmd = app.add_subcommand("osp-basis", "List the block-parameter basis of an osp algebra");
  osp_cmd->add_option("--flavor", flavor, "odd: osp(2m+1|2n), even: osp(2m|2n), primed: diagonal form, m = t");
  osp_cmd->add_option("--m", m, "Even rank parameter")->capture_default_str();
  osp_cmd->add_option("--n", n, "Odd rank parameter")->capture_default_str();
  osp_cmd->add_flag("--matrices", show_matrices, "Print every generator matrix");

  // check-membership
  std::string matrix_text, matrix_file;
  auto* member_cmd = app.add_subcommand("check-membership", "Test M^ST Gamma + Gamma M = 0 for a numeric matrix");
  member_cmd->add_option("--flavor", flavor, "odd, even or primed");
  member_cmd->add_option("--m", m, "Even rank parameter");
  member_cmd->add_option("--n", n, "Odd rank parameter");
  member_cmd->add_option("--matrix", matrix_text, "Matrix literal, e.g. \"[1, 0; 0, -1]\"");
  member_cmd->add_option("--matrix-file", matrix_file, "File holding the matrix literal");

  // flag-validate
  std::string flag_text, reading = "literal";
  auto* flag_cmd = app.add_subcommand("flag-validate", "Validate a flag type and report its global functions");
  flag_cmd->add_option("--flag", flag_text, "Flag type, e.g. \"k=3,1 l=2,1\"")->required();
  flag_cmd->add_option("--reading", reading, "Index convention for the excluded families: literal or natural")
      ->check(CLI::IsMember({"literal", "natural"}));

  // act
  std::vector<std::string> index_args, target_args;
  auto* act_cmd = app.add_subcommand("act", "Apply a numeric supergroup element to the generic chart");
  act_cmd->add_option("--flag", flag_text, "Flag type")->required();
  act_cmd->add_option("--index", index_args, "Index set per step, e.g. I1=2;2 (default: leading rows)");
  act_cmd->add_option("--target", target_args, "Target index sets (default: the source ones)");
  act_cmd->add_option("--matrix", matrix_text, "Group element as a matrix literal");
  act_cmd->add_option("--matrix-file", matrix_file, "File holding the matrix literal");

  // fundamental-field
  auto* field_cmd = app.add_subcommand("fundamental-field", "Fundamental vector field of a matrix on a chart");
  field_cmd->add_option("--flag", flag_text, "Flag type")->required();
  field_cmd->add_option("--index", index_args, "Index set per step");
  field_cmd->add_option("--matrix", matrix_text, "Homogeneous algebra element as a matrix literal");
  field_cmd->add_option("--matrix-file", matrix_file, "File holding the matrix literal");

  // isotropic-chart
  std::size_t k1 = 2, l1 = 1;
  std::vector<std::size_t> tail_k, tail_l;
  auto* iso_cmd = app.add_subcommand("isotropic-chart", "Maximal-type isotropic chart with solved coordinates");
  iso_cmd->add_option("--k1", k1, "k1 >= 1")->capture_default_str();
  iso_cmd->add_option("--l1", l1, "l1 >= 1")->capture_default_str();
  iso_cmd->add_option("--tail-k", tail_k, "Remaining even flag dimensions")->delimiter(',');
  iso_cmd->add_option("--tail-l", tail_l, "Remaining odd flag dimensions")->delimiter(',');

  // bwb
  auto* bwb_cmd = app.add_subcommand("bwb", "Fiber highest weights, dominance and H^0");
  bwb_cmd->add_option("--k1", k1, "k1 >= 1")->capture_default_str();
  bwb_cmd->add_option("--l1", l1, "l1 >= 1")->capture_default_str();

  // verify
  std::string suite, config_path, json_out;
  std::optional<std::size_t> vm, vn, vk1, vl1;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> samples;
  bool verbose = false;
  auto* verify_cmd = app.add_subcommand("verify", "Run verification suites");
  verify_cmd->add_option("--suite", suite, "Single suite to run")->check(CLI::IsMember(verify::suite_names()));
  verify_cmd->add_option("--m", vm, "m for osp-defining");
  verify_cmd->add_option("--n", vn, "n for osp-defining");
  verify_cmd->add_option("--k1", vk1, "k1 for the chart, weight and embedding suites");
  verify_cmd->add_option("--l1", vl1, "l1 for the chart, weight and embedding suites");
  verify_cmd->add_option("--tail-k", tail_k, "Tail for lemma-fields")->delimiter(',');
  verify_cmd->add_option("--tail-l", tail_l, "Tail for lemma-fields")->delimiter(',');
  verify_cmd->add_option("--seed", seed, "Seed for the action suite");
  verify_cmd->add_option("--samples", samples, "Random pairs for the action suite");
  verify_cmd->add_option("--config", config_path, "Config file of key = value lines");
  verify_cmd->add_option("--json-out", json_out, "Write a superflag-report/1 JSON document here");
  verify_cmd->add_flag("--verbose,-v", verbose, "List passing checks too");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    const std::size_t bound = verify::max_size_from_env();

    if (*osp_cmd) {
      cap(m, flavor == "primed" ? 2 * bound + 1 : bound, "m");
      cap(n, bound, "n");
      const OspBasis b = basis(parse_flavor(flavor), m, n);
      std::cout << "osp " << to_string(b.form.flavor) << " m=" << m << " n=" << n << ": " << b.count(Parity::even)
                << " even + " << b.count(Parity::odd) << " odd generators\n";
      for (const auto& g : b.generators) {
        std::cout << "  " << g.tag.to_string() << " " << (g.parity == Parity::odd ? "odd" : "even") << "\n";
        if (show_matrices) std::cout << "    " << to_string(g.matrix) << "\n";
      }
      return 0;
    }

    if (*member_cmd) {
      const GramForm form = gram_form(parse_flavor(flavor), m, n);
      const NumericMatrix x = parse_numeric_matrix(matrix_argument(matrix_text, matrix_file), form.shape());
      const bool ok = is_member(x, form);
      std::cout << (ok ? "member" : "not a member") << "\n";
      if (!ok) std::cout << "residual " << to_string(defining_residual(x, form)) << "\n";
      return ok ? 0 : kExitFailure;
    }

    if (*flag_cmd) {
      FlagType ft;
      try {
        ft = parse_flag_type(flag_text);
      } catch (const std::invalid_argument& e) {
        std::cout << "invalid: " << e.what() << "\n";
        return kExitFailure;
      }
      const auto [even, odd] = ft.dimension();
      std::cout << "valid " << ft.to_string() << "\n";
      std::cout << "dimension " << even << "|" << odd << "\n";
      if (ft.is_purely_even()) {
        std::cout << "purely even: not a flag supermanifold\n";
      } else {
        const auto r = reading == "natural" ? ConstantReading::natural : ConstantReading::literal;
        std::cout << "global functions: "
                  << (constant_functions_predicate(ft, r) ? "constants"
                                                          : "Grassmann algebra on " + std::to_string(ft.m() * ft.n()) +
                                                                " generators")
                  << " (" << reading << " reading)\n";
      }
      return 0;
    }

    if (*act_cmd || *field_cmd) {
      const FlagType ft = parse_flag_type(flag_text);
      cap_flag(ft);
      const Chart c = build_chart(ft, index_sets_or_default(ft, index_args));
      const NumericMatrix x =
          parse_numeric_matrix(matrix_argument(matrix_text, matrix_file), BlockShape::square(ft.m(), ft.n()));
      if (*field_cmd) {
        std::cout << fundamental_field(x, c).to_string() << "\n";
        return 0;
      }
      std::vector<IndexSet> targets;
      for (const auto& a : target_args) targets.push_back(parse_index_arg(a));
      std::cout << act(to_symbolic(x), c, targets).to_string() << "\n";
      return 0;
    }

    if (*iso_cmd) {
      cap(k1, bound, "k1");
      cap(l1, bound, "l1");
      const IsotropicChart ic = isotropic_chart(k1, l1, tail_k, tail_l);
      std::cout << ic.chart.to_string() << "\n";
      for (const auto& pos : ic.dependent_positions)
        std::cout << "  " << ic.chart.ring->spec(pos.var).name << " = " << ic.dependent.at(pos.var).to_string() << "\n";
      const bool zero = ic.isotropy_residual().is_zero();
      std::cout << "isotropy residual " << (zero ? "zero" : "NONZERO") << "\n";
      return zero ? 0 : kExitFailure;
    }

    if (*bwb_cmd) {
      const RootSystem rs = root_system(k1 - 1, l1);
      const auto weights = psi_highest_weights(k1, l1);
      std::cout << "highest weights for k1=" << k1 << " l1=" << l1 << " (s=" << rs.s << ", n=" << rs.n << ")\n";
      if (weights.empty()) std::cout << "  (none)\n";
      for (const auto& w : weights) {
        std::cout << "  " << w.to_string() << ": ";
        if (const auto bad = violating_root(w, rs))
          std::cout << "not dominant, (w, " << bad->to_string() << ") = " << dot(w, *bad) << "\n";
        else
          std::cout << "dominant\n";
      }
      std::cout << "H^0 = " << w0_fiber_description(k1, l1) << "\n";
      return 0;
    }

    if (*verify_cmd) {
      verify::RunConfig config;
      if (!config_path.empty()) {
        try {
          config = verify::parse_config(read_file(config_path));
        } catch (const verify::ConfigError& e) {
          std::cerr << config_path << ": " << e.what() << "\n";
          return kExitUsage;
        }
      }
      if (seed) config.seed = *seed;
      if (samples) config.action_samples = *samples;

      std::vector<verify::SuiteReport> reports;
      const bool sized = vm || vn || vk1 || vl1;
      if (sized && suite.empty()) throw UsageError("size options need --suite");
      if (!suite.empty() && sized) {
        auto need = [](const std::optional<std::size_t>& v, const char* name) {
          if (!v) throw UsageError(std::string("--suite needs --") + name + " here");
          return *v;
        };
        if (suite == "osp-defining") {
          const std::size_t mm = need(vm, "m"), nn = need(vn, "n");
          reports.push_back(verify::suite_osp_defining(mm, nn, mm <= config.jacobi_max && nn <= config.jacobi_max));
        } else if (suite == "action") {
          throw UsageError("the action suite takes --seed and --samples only");
        } else {
          const std::size_t a = need(vk1, "k1"), b = need(vl1, "l1");
          if (suite == "lemma-fields") {
            auto tail = verify::default_tail(a, b);
            if (!tail_k.empty() || !tail_l.empty()) tail = {tail_k, tail_l};
            reports.push_back(verify::suite_lemma_fields(a, b, tail.first, tail.second));
          } else if (suite == "isotropy") {
            reports.push_back(verify::suite_isotropy(a, b));
          } else if (suite == "bwb") {
            reports.push_back(verify::suite_bwb(a, b));
          } else if (suite == "isomorphism") {
            reports.push_back(
                verify::suite_isomorphism(a, b, a <= config.parabolic_max && b <= config.parabolic_max));
          } else {
            reports.push_back(verify::suite_imP_witness(a, b));
          }
        }
      } else {
        if (!suite.empty()) config.suites = {suite};
        reports = verify::run_all(config);
      }

      bool all = true;
      for (const auto& r : reports) {
        std::cout << verify::render_text(r, verbose);
        all = all && r.passed();
      }
      std::cout << (all ? "PASS" : "FAIL") << ": " << reports.size() << " suite(s)\n";
      if (!json_out.empty()) {
        std::ofstream out(json_out);
        if (!out) throw UsageError("cannot write " + json_out);
        out << verify::render_json(reports);
      }
      return all ? 0 : kExitFailure;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const verify::SizeLimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return 0;
}
