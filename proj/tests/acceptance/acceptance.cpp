// One line per acceptance criterion: exact checks plus a wall-clock bound.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <string>

#include "superflag/flag_charts.hpp"
#include "superflag/osp_algebra.hpp"
#include "superflag/root_weights.hpp"
#include "superflag/verify/suites.hpp"

using namespace superflag;
namespace sv = superflag::verify;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      note = what;
    }
  }
  void require(const sv::SuiteReport& r) {
    for (const auto& c : r.checks)
      if (c.status == sv::Status::fail) require(false, r.suite + " " + c.id + ": " + c.witness);
  }
};

std::string sizes(std::size_t a, std::size_t b) { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }

Outcome defining_relations() {
  Outcome o;
  for (std::size_t m = 0; m <= 3; ++m) {
    for (std::size_t n = 0; n <= 3; ++n) {
      if (m + n == 0) continue;
      const OspBasis b = basis(OspFlavor::odd, m, n);
      o.require(b.count(Parity::even) == m * (2 * m + 1) + n * (2 * n + 1), "even count at " + sizes(m, n));
      o.require(b.count(Parity::odd) == 2 * n * (2 * m + 1), "odd count at " + sizes(m, n));
      for (const auto& g : b.generators)
        o.require(is_member(g.matrix, b.form), g.tag.to_string() + " not a member at " + sizes(m, n));
      o.require(closure_check(b).closed(), "closure at " + sizes(m, n));
      if (m <= 2 && n <= 2) o.require(jacobi_check(b.matrices()).holds(), "super-Jacobi at " + sizes(m, n));
    }
  }
  return o;
}

Outcome center_triviality() {
  Outcome o;
  for (auto [m, n] : {std::pair<std::size_t, std::size_t>{1, 1}, {2, 1}, {1, 2}, {2, 2}})
    o.require(center(OspFlavor::odd, m, n).empty(), "nonzero center at " + sizes(m, n));
  return o;
}

Outcome lemma_fields() {
  Outcome o;
  for (auto [k1, l1] : {std::pair<std::size_t, std::size_t>{2, 1}, {2, 2}, {3, 1}})
    o.require(sv::suite_lemma_fields(k1, l1, {1}, {0}));
  return o;
}

Outcome isotropy() {
  Outcome o;
  for (std::size_t k1 = 1; k1 <= 3; ++k1)
    for (std::size_t l1 = 1; l1 <= 2; ++l1) o.require(sv::suite_isotropy(k1, l1));
  return o;
}

Outcome bwb_table() {
  Outcome o;
  for (std::size_t k1 = 1; k1 <= 6; ++k1) {
    for (std::size_t l1 = 1; l1 <= 4; ++l1) {
      const auto kept = bwb_dominant_filter(psi_highest_weights(k1, l1), root_system(k1 - 1, l1));
      const bool expected = k1 == 1 ? kept.empty() : kept == std::vector<Weight>{Weight::zero(k1 - 1, l1)};
      o.require(expected, "dominant weights at " + sizes(k1, l1));
      o.require(w0_fiber_description(k1, l1) == (k1 == 1 ? "{0}" : "ℂ"), "fiber at " + sizes(k1, l1));
    }
  }
  return o;
}

Outcome basis_change() {
  Outcome o;
  for (std::size_t k1 = 1; k1 <= 3; ++k1)
    for (std::size_t l1 = 1; l1 <= 3; ++l1) o.require(sv::suite_isomorphism(k1, l1, k1 <= 2 && l1 <= 2));
  return o;
}

Outcome imp_witness() {
  Outcome o;
  for (auto [k1, l1] : {std::pair<std::size_t, std::size_t>{1, 1}, {2, 1}, {2, 2}})
    o.require(sv::suite_imP_witness(k1, l1));
  return o;
}

Outcome action() {
  Outcome o;
  o.require(sv::suite_action(sv::RunConfig{}.seed, 20));
  return o;
}

NumericMatrix random_matrix(std::mt19937_64& rng, BlockShape s, Parity p) {
  std::uniform_int_distribution<long> d(-4, 4);
  NumericMatrix m(s);
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (s.row_parity(r) + s.col_parity(c) == p) m(r, c) = FieldScalar(Rational(d(rng), 3));
  return m;
}

Outcome properties() {
  Outcome o;
  std::mt19937_64 rng(20240611);
  auto coin = [&] { return (rng() & 1) ? Parity::odd : Parity::even; };

  const RingPtr ring = RingContext::create({{"x", Parity::even, 0},
                                            {"xi", Parity::odd, 0},
                                            {"eta", Parity::odd, 0},
                                            {"zeta", Parity::odd, 0}});
  const std::vector<SuperPoly> vars{SuperPoly::variable(ring, "x"), SuperPoly::variable(ring, "xi"),
                                    SuperPoly::variable(ring, "eta"), SuperPoly::variable(ring, "zeta")};
  auto poly = [&](Parity want) {
    SuperPoly out;
    for (int t = 0; t < 3; ++t) {
      SuperPoly mono = FieldScalar(static_cast<long>(rng() % 7) - 3);
      Parity p = Parity::even;
      for (std::size_t v = 0; v < vars.size(); ++v) {
        if (rng() % 2) continue;
        mono *= vars[v];
        if (v > 0) p = p + Parity::odd;
      }
      if (p != want) mono *= vars[3];
      out += mono;
    }
    return out;
  };
  for (int t = 0; t < 200; ++t) {
    const Parity pp = coin(), pq = coin();
    const SuperPoly p = poly(pp), q = poly(pq);
    const bool both_odd = p.homogeneity() == Homogeneity::odd && q.homogeneity() == Homogeneity::odd;
    o.require(p * q == (both_odd ? -(q * p) : q * p), "supercommutativity");
    for (VarId a = 1; a < 4; ++a)
      for (VarId b = 1; b < 4; ++b)
        o.require(p.left_derivative(a).left_derivative(b) == -p.left_derivative(b).left_derivative(a),
                  "derivative anticommutation");
  }

  for (int t = 0; t < 200; ++t) {
    const BlockShape s = BlockShape::square(1 + rng() % 3, 1 + rng() % 3);
    const Parity pm = coin(), pn = coin();
    const NumericMatrix m = random_matrix(rng, s, pm), n = random_matrix(rng, s, pn);
    const NumericMatrix rhs = supertranspose(n) * supertranspose(m);
    o.require(supertranspose(m * n) == (is_odd(pm) && is_odd(pn) ? -rhs : rhs), "supertranspose product rule");
  }

  const RingPtr taus = RingContext::create({{"tau1", Parity::odd, 0}, {"tau2", Parity::odd, 0}});
  const SuperPoly t1 = SuperPoly::variable(taus, "tau1"), t2 = SuperPoly::variable(taus, "tau2");
  for (int t = 0; t < 50; ++t) {
    const BlockShape s = BlockShape::square(1 + rng() % 3, 1 + rng() % 2);
    NumericMatrix body = random_matrix(rng, s, Parity::even);
    for (std::size_t k = 0; k < body.rows(); ++k) body(k, k) += 5;  // diagonally dominant
    SuperMatrix m = to_symbolic(body) + t1 * to_symbolic(random_matrix(rng, s, Parity::odd)) +
                    (t1 * t2) * to_symbolic(random_matrix(rng, s, Parity::even));
    const SuperMatrix mi = invert(m);
    o.require(m * mi == SuperMatrix::identity(s) && mi * m == SuperMatrix::identity(s), "two-sided inversion");
  }

  for (std::size_t s = 0; s <= 3; ++s) {
    for (std::size_t n = 0; n <= 3; ++n) {
      const RootSystem rs = root_system(s, n);
      std::vector<long> c(s + n, -3);
      while (true) {
        const Weight w{{c.begin(), c.begin() + s}, {c.begin() + s, c.end()}};
        o.require(is_dominant(w, rs) == is_dominant_simple(w, rs), "dominance criteria at " + w.to_string());
        std::size_t k = 0;
        while (k < c.size() && c[k] == 3) c[k++] = -3;
        if (k == c.size()) break;
        ++c[k];
      }
    }
  }
  return o;
}

struct Criterion {
  int id;
  const char* name;
  double bound_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  // Criteria fix their own sizes; an inherited cap must not shrink them.
  unsetenv("SUPERFLAG_MAX_SIZE");
  const std::vector<Criterion> criteria{
      {1, "defining relations, counts, closure and super-Jacobi", 30, defining_relations},
      {2, "trivial center", 10, center_triviality},
      {3, "fundamental coordinate fields", 20, lemma_fields},
      {4, "isotropy and tangency", 20, isotropy},
      {5, "dominant weights of the fiber", 1, bwb_table},
      {6, "basis change, conjugation and embedding", 30, basis_change},
      {7, "odd-odd bracket outside the image", 10, imp_witness},
      {8, "action coherence", 30, action},
      {9, "randomized invariants", 30, properties},
  };
  bool all = true;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.note = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool timely = seconds < c.bound_seconds;
    const bool pass = o.ok && timely;
    all = all && pass;
    std::printf("criterion %d: %s  %s  (%.3f s, bound %.0f s)%s%s\n", c.id, pass ? "PASS" : "FAIL", c.name, seconds,
                c.bound_seconds, o.note.empty() ? "" : "  ", o.note.c_str());
    if (o.ok && !timely) std::printf("  exceeded the runtime bound\n");
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
