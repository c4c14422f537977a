#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "superflag/verify/report.hpp"

namespace superflag::verify {

/// Size request above the configured bound.
struct SizeLimitError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// SUPERFLAG_MAX_SIZE, or 3 when unset. Throws std::invalid_argument when the
/// variable is not a positive integer.
std::size_t max_size_from_env();

/// Basis counts, membership, independence, closure, trivial center and
/// (optionally) super-Jacobi for the odd flavor osp(2m+1|2n).
SuiteReport suite_osp_defining(std::size_t m, std::size_t n, bool jacobi);

/// The coordinate fields d/deta_ab and h_i are fundamental on the isotropic
/// chart of type (2k1-1, k1-1, tail k | 2l1, l1, tail l).
SuiteReport suite_lemma_fields(std::size_t k1, std::size_t l1, const std::vector<std::size_t>& tail_k,
                               const std::vector<std::size_t>& tail_l);

/// Isotropy residual is zero and every basis field is tangent to the
/// dependent-coordinate relations.
SuiteReport suite_isotropy(std::size_t k1, std::size_t l1);

/// Highest weights of the fiber, their dominance and the H^0 description.
SuiteReport suite_bwb(std::size_t k1, std::size_t l1);

/// Basis change S, conjugation isomorphism, the embedding j and parabolics.
SuiteReport suite_isomorphism(std::size_t k1, std::size_t l1, bool parabolics);

/// The odd-odd bracket whose value leaves the j-image.
SuiteReport suite_imP_witness(std::size_t k1, std::size_t l1);

/// act(E) = id and act(L', act(L, c)) = act(L'L, c) on random L, L' at
/// k = (3,1), l = (2,1).
SuiteReport suite_action(std::uint64_t seed, std::size_t samples);

/// Default tail used by the lemma suite: (1 | 0) for k1 >= 2, (0 | l1-1) for
/// k1 = 1 and l1 >= 2, none otherwise.
std::pair<std::vector<std::size_t>, std::vector<std::size_t>> default_tail(std::size_t k1, std::size_t l1);

const std::vector<std::string>& suite_names();

struct RunConfig {
  std::vector<std::string> suites;  // empty means all
  std::size_t max_size = 3;
  std::size_t jacobi_max = 2;
  std::size_t parabolic_max = 2;
  std::uint64_t seed = 20240611;
  std::size_t action_samples = 20;
};

struct ConfigError : std::runtime_error {
  ConfigError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line(line) {}
  std::size_t line;
};

/// `key = value` lines; '#' starts a comment. Keys: suites (comma list),
/// max_size, jacobi_max, parabolic_max, seed, action_samples.
RunConfig parse_config(const std::string& text, RunConfig base = {});

/// Every selected suite over every size within the bounds.
std::vector<SuiteReport> run_all(const RunConfig& config);

}  // namespace superflag::verify
