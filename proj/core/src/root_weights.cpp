#include "superflag/root_weights.hpp"

#include <stdexcept>

namespace superflag {

namespace {

void require_same_rank(const Weight& a, const Weight& b) {
  if (a.mu.size() != b.mu.size() || a.lambda.size() != b.lambda.size())
    throw std::invalid_argument("weight rank mismatch");
}

void append_term(std::string& out, long c, const std::string& name) {
  if (c == 0) return;
  if (out.empty()) {
    if (c < 0) out += "-";
  } else {
    out += c < 0 ? " - " : " + ";
  }
  const long a = c < 0 ? -c : c;
  if (a != 1) out += std::to_string(a) + "*";
  out += name;
}

}  // namespace

Weight Weight::zero(std::size_t s, std::size_t n) { return Weight{std::vector<long>(s), std::vector<long>(n)}; }

Weight Weight::mu_unit(std::size_t s, std::size_t n, std::size_t i) {
  if (i == 0 || i > s) throw std::out_of_range("mu index out of range");
  Weight w = zero(s, n);
  w.mu[i - 1] = 1;
  return w;
}

Weight Weight::lambda_unit(std::size_t s, std::size_t n, std::size_t p) {
  if (p == 0 || p > n) throw std::out_of_range("lambda index out of range");
  Weight w = zero(s, n);
  w.lambda[p - 1] = 1;
  return w;
}

bool Weight::is_zero() const {
  for (long c : mu)
    if (c != 0) return false;
  for (long c : lambda)
    if (c != 0) return false;
  return true;
}

std::string Weight::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < mu.size(); ++i) append_term(out, mu[i], "mu" + std::to_string(i + 1));
  for (std::size_t p = 0; p < lambda.size(); ++p) append_term(out, lambda[p], "lambda" + std::to_string(p + 1));
  return out.empty() ? "0" : out;
}

Weight& Weight::operator+=(const Weight& o) {
  require_same_rank(*this, o);
  for (std::size_t i = 0; i < mu.size(); ++i) mu[i] += o.mu[i];
  for (std::size_t p = 0; p < lambda.size(); ++p) lambda[p] += o.lambda[p];
  return *this;
}

Weight& Weight::operator-=(const Weight& o) {
  require_same_rank(*this, o);
  for (std::size_t i = 0; i < mu.size(); ++i) mu[i] -= o.mu[i];
  for (std::size_t p = 0; p < lambda.size(); ++p) lambda[p] -= o.lambda[p];
  return *this;
}

Weight operator*(long c, Weight w) {
  for (long& x : w.mu) x *= c;
  for (long& x : w.lambda) x *= c;
  return w;
}

long dot(const Weight& a, const Weight& b) {
  require_same_rank(a, b);
  long out = 0;
  for (std::size_t i = 0; i < a.mu.size(); ++i) out += a.mu[i] * b.mu[i];
  for (std::size_t p = 0; p < a.lambda.size(); ++p) out += a.lambda[p] * b.lambda[p];
  return out;
}

std::vector<Weight> RootSystem::positive() const {
  std::vector<Weight> out = positive_so;
  out.insert(out.end(), positive_sp.begin(), positive_sp.end());
  return out;
}

std::vector<Weight> RootSystem::simple() const {
  std::vector<Weight> out = simple_so;
  out.insert(out.end(), simple_sp.begin(), simple_sp.end());
  return out;
}

RootSystem root_system(std::size_t s, std::size_t n) {
  RootSystem rs;
  rs.s = s;
  rs.n = n;
  auto mu = [&](std::size_t i) { return Weight::mu_unit(s, n, i); };
  auto la = [&](std::size_t p) { return Weight::lambda_unit(s, n, p); };
  for (std::size_t i = 1; i <= s; ++i) {
    for (std::size_t j = i + 1; j <= s; ++j) {
      rs.positive_so.push_back(mu(i) - mu(j));
      rs.positive_so.push_back(mu(i) + mu(j));
    }
    rs.positive_so.push_back(mu(i));
  }
  for (std::size_t p = 1; p <= n; ++p) {
    for (std::size_t q = p + 1; q <= n; ++q) rs.positive_sp.push_back(la(p) - la(q));
    for (std::size_t q = p; q <= n; ++q) rs.positive_sp.push_back(la(p) + la(q));
  }
  for (std::size_t i = 1; i < s; ++i) rs.simple_so.push_back(mu(i) - mu(i + 1));
  if (s > 0) rs.simple_so.push_back(mu(s));
  for (std::size_t j = 1; j < n; ++j) rs.simple_sp.push_back(la(j) - la(j + 1));
  if (n > 0) rs.simple_sp.push_back(2 * la(n));
  return rs;
}

std::optional<Weight> violating_root(const Weight& w, const RootSystem& rs) {
  for (const auto& a : rs.positive())
    if (dot(w, a) < 0) return a;
  return std::nullopt;
}

bool is_dominant(const Weight& w, const RootSystem& rs) { return !violating_root(w, rs); }

bool is_dominant_simple(const Weight& w, const RootSystem& rs) {
  for (const auto& a : rs.simple())
    if (dot(w, a) < 0) return false;
  return true;
}

std::vector<Weight> psi_highest_weights(std::size_t k1, std::size_t l1) {
  if (k1 == 0 || l1 == 0) throw std::invalid_argument("psi_highest_weights needs k1 >= 1 and l1 >= 1");
  const std::size_t s = k1 - 1, n = l1;
  if (k1 == 1) {
    if (l1 == 1) return {};
    return {Weight::lambda_unit(s, n, 1) - Weight::lambda_unit(s, n, n)};
  }
  const Weight mu_first = Weight::mu_unit(s, n, 1), mu_last = Weight::mu_unit(s, n, s);
  const Weight la_first = Weight::lambda_unit(s, n, 1), la_last = Weight::lambda_unit(s, n, n);
  std::vector<Weight> out;
  // mu_1 - mu_{k1-1} and lambda_1 - lambda_{l1} vanish at k1 = 2 and l1 = 1.
  if (k1 > 2) out.push_back(mu_first - mu_last);
  out.push_back(mu_first - la_last);
  out.push_back(la_first - mu_last);
  if (l1 > 1) out.push_back(la_first - la_last);
  out.push_back(Weight::zero(s, n));
  return out;
}

std::vector<Weight> bwb_dominant_filter(const std::vector<Weight>& weights, const RootSystem& rs) {
  std::vector<Weight> out;
  for (const auto& w : weights)
    if (is_dominant(w, rs)) out.push_back(w);
  return out;
}

std::string w0_fiber_description(std::size_t k1, std::size_t l1) {
  const auto surviving = bwb_dominant_filter(psi_highest_weights(k1, l1), root_system(k1 - 1, l1));
  for (const auto& w : surviving)
    if (!w.is_zero()) throw std::logic_error("nonzero dominant weight " + w.to_string());
  if (surviving.empty()) return "{0}";
  if (surviving.size() == 1) return "ℂ";
  throw std::logic_error("zero weight survives more than once");
}

}  // namespace superflag
