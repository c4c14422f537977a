#include <doctest.h>

#include <algorithm>

#include "superflag/root_weights.hpp"

using namespace superflag;

namespace {

Weight mu(std::size_t s, std::size_t n, std::size_t i) { return Weight::mu_unit(s, n, i); }
Weight la(std::size_t s, std::size_t n, std::size_t p) { return Weight::lambda_unit(s, n, p); }

}  // namespace

TEST_CASE("root systems") {
  const RootSystem r11 = root_system(1, 1);
  CHECK(r11.positive_so == std::vector<Weight>{mu(1, 1, 1)});
  CHECK(r11.positive_sp == std::vector<Weight>{2 * la(1, 1, 1)});
  const RootSystem r20 = root_system(2, 0);
  CHECK(r20.positive_so.size() == 4);
  for (const auto& w : {mu(2, 0, 1) - mu(2, 0, 2), mu(2, 0, 1) + mu(2, 0, 2), mu(2, 0, 1), mu(2, 0, 2)})
    CHECK(std::find(r20.positive_so.begin(), r20.positive_so.end(), w) != r20.positive_so.end());
  CHECK(root_system(0, 2).positive_so.empty());
  for (std::size_t s = 0; s <= 4; ++s) {
    for (std::size_t n = 0; n <= 4; ++n) {
      const RootSystem rs = root_system(s, n);
      CHECK(rs.positive_so.size() == s * s);
      CHECK(rs.positive_sp.size() == n * n);
      CHECK(rs.simple().size() == s + n);
    }
  }
}

TEST_CASE("positive roots are nonnegative combinations of simple roots") {
  // Partial sums of the coordinates give the simple-root coefficients; the last
  // sp coefficient is halved because the last simple root is 2*lambda_n.
  for (std::size_t s = 0; s <= 3; ++s) {
    for (std::size_t n = 0; n <= 3; ++n) {
      const RootSystem rs = root_system(s, n);
      for (const auto& a : rs.positive()) {
        std::vector<long> c(s + n);
        long carry = 0;
        for (std::size_t i = 0; i < s; ++i) c[i] = carry += a.mu[i];
        carry = 0;
        for (std::size_t p = 0; p < n; ++p) c[s + p] = carry += a.lambda[p];
        if (n > 0) {
          CHECK(c[s + n - 1] % 2 == 0);
          c[s + n - 1] /= 2;
        }
        Weight back = Weight::zero(s, n);
        const auto simple = rs.simple();
        for (std::size_t k = 0; k < simple.size(); ++k) {
          CHECK(c[k] >= 0);
          back += c[k] * simple[k];
        }
        CHECK(back == a);
      }
    }
  }
}

TEST_CASE("dominance") {
  const RootSystem rs = root_system(2, 2);
  CHECK(is_dominant(Weight::zero(2, 2), rs));
  CHECK_FALSE(is_dominant(mu(2, 2, 1) - mu(2, 2, 2), rs));
  CHECK(dot(mu(2, 2, 1) - mu(2, 2, 2), mu(2, 2, 2)) == -1);
  CHECK_FALSE(is_dominant(la(2, 2, 1) - la(2, 2, 2), rs));
  CHECK(dot(la(2, 2, 1) - la(2, 2, 2), 2 * la(2, 2, 2)) == -2);
  CHECK(is_dominant(mu(2, 2, 1) + la(2, 2, 1), rs));
  CHECK(violating_root(mu(2, 2, 1) - mu(2, 2, 2), rs).has_value());
  CHECK_THROWS_AS(dot(mu(1, 1, 1), mu(2, 1, 1)), std::invalid_argument);
}

TEST_CASE("fiber highest weights") {
  CHECK(psi_highest_weights(3, 2) == std::vector<Weight>{mu(2, 2, 1) - mu(2, 2, 2), mu(2, 2, 1) - la(2, 2, 2),
                                                         la(2, 2, 1) - mu(2, 2, 2), la(2, 2, 1) - la(2, 2, 2),
                                                         Weight::zero(2, 2)});
  CHECK(psi_highest_weights(2, 1) ==
        std::vector<Weight>{mu(1, 1, 1) - la(1, 1, 1), la(1, 1, 1) - mu(1, 1, 1), Weight::zero(1, 1)});
  CHECK(psi_highest_weights(1, 1).empty());
  CHECK(psi_highest_weights(1, 2) == std::vector<Weight>{la(0, 2, 1) - la(0, 2, 2)});
  CHECK_THROWS_AS(psi_highest_weights(0, 1), std::invalid_argument);
  CHECK((mu(2, 2, 1) - la(2, 2, 2)).to_string() == "mu1 - lambda2");
  CHECK((2 * la(1, 2, 2)).to_string() == "2*lambda2");
  CHECK(Weight::zero(1, 1).to_string() == "0");
}

TEST_CASE("dominant filter and fiber") {
  CHECK(bwb_dominant_filter(psi_highest_weights(3, 2), root_system(2, 2)) == std::vector<Weight>{Weight::zero(2, 2)});
  CHECK(bwb_dominant_filter(psi_highest_weights(1, 2), root_system(0, 2)).empty());
  const std::vector<Weight> zeros{Weight::zero(1, 1), Weight::zero(1, 1)};
  CHECK(bwb_dominant_filter(zeros, root_system(1, 1)) == zeros);
  CHECK(w0_fiber_description(2, 1) == "ℂ");
  CHECK(w0_fiber_description(1, 2) == "{0}");
  CHECK(w0_fiber_description(4, 3) == "ℂ");
  for (std::size_t k1 = 1; k1 <= 6; ++k1) {
    for (std::size_t l1 = 1; l1 <= 4; ++l1) {
      const auto kept = bwb_dominant_filter(psi_highest_weights(k1, l1), root_system(k1 - 1, l1));
      if (k1 == 1) {
        CHECK(kept.empty());
      } else {
        CHECK(kept == std::vector<Weight>{Weight::zero(k1 - 1, l1)});
      }
    }
  }
}
