#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace superflag {

/// Integer weight in the orthonormal basis mu_1..mu_s, lambda_1..lambda_n.
struct Weight {
  std::vector<long> mu;
  std::vector<long> lambda;

  static Weight zero(std::size_t s, std::size_t n);
  static Weight mu_unit(std::size_t s, std::size_t n, std::size_t i);      // 1-based
  static Weight lambda_unit(std::size_t s, std::size_t n, std::size_t p);  // 1-based

  bool is_zero() const;
  std::string to_string() const;  // e.g. "mu1 - lambda2", "0"

  Weight& operator+=(const Weight& o);
  Weight& operator-=(const Weight& o);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(long c, Weight w);
  bool operator==(const Weight&) const = default;
};

/// Throws std::invalid_argument on a rank mismatch.
long dot(const Weight& a, const Weight& b);

/// Positive and simple roots of so(2s+1) + sp(2n).
struct RootSystem {
  std::size_t s = 0;
  std::size_t n = 0;
  std::vector<Weight> positive_so;  // mu_i - mu_j, mu_i + mu_j (i<j), mu_i
  std::vector<Weight> positive_sp;  // lambda_p - lambda_q (p<q), lambda_p + lambda_q (p<=q)
  std::vector<Weight> simple_so;    // mu_i - mu_{i+1}, mu_s
  std::vector<Weight> simple_sp;    // lambda_j - lambda_{j+1}, 2 lambda_n

  std::vector<Weight> positive() const;
  std::vector<Weight> simple() const;
};

RootSystem root_system(std::size_t s, std::size_t n);

/// First positive root pairing negatively with w, if any.
std::optional<Weight> violating_root(const Weight& w, const RootSystem& rs);

/// (w, alpha) >= 0 for every positive root.
bool is_dominant(const Weight& w, const RootSystem& rs);

/// (w, alpha) >= 0 for every simple root.
bool is_dominant_simple(const Weight& w, const RootSystem& rs);

/// Highest weights of the fiber representation over so(2k1-1) + sp(2l1),
/// i.e. ranks s = k1 - 1 and n = l1. Throws for k1 = 0 or l1 = 0.
std::vector<Weight> psi_highest_weights(std::size_t k1, std::size_t l1);

/// Dominant members of `weights`, in order and with multiplicity.
std::vector<Weight> bwb_dominant_filter(const std::vector<Weight>& weights, const RootSystem& rs);

/// "ℂ" when only the zero weight survives, "{0}" when nothing does. Throws
/// std::logic_error if a nonzero dominant weight survives.
std::string w0_fiber_description(std::size_t k1, std::size_t l1);

}  // namespace superflag
