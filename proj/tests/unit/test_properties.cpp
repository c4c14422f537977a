#include <doctest.h>

#include <random>

#include "superflag/osp_algebra.hpp"
#include "superflag/root_weights.hpp"
#include "superflag/super_matrix.hpp"
#include "superflag/super_poly.hpp"

using namespace superflag;

namespace {

struct Gen {
  std::mt19937_64 rng;
  explicit Gen(std::uint64_t seed) : rng(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }
  bool coin() { return integer(0, 1) == 1; }

  FieldScalar scalar() {
    FieldScalar x(Rational(integer(-5, 5), integer(1, 3)));
    if (coin()) x += FieldScalar(integer(-2, 2)) * FieldScalar::i();
    if (coin()) x += FieldScalar(integer(-2, 2)) * FieldScalar::sqrt2();
    return x;
  }

  /// Random polynomial of the given parity in the variables of `ring`.
  SuperPoly poly(const RingPtr& ring, Parity parity) {
    SuperPoly out;
    for (int t = integer(1, 4); t > 0; --t) {
      SuperPoly mono = scalar();
      Parity p = Parity::even;
      for (VarId v = 0; v < ring->size(); ++v) {
        if (integer(0, 2) != 0) continue;
        mono *= SuperPoly::variable(ring, v);
        if (is_odd(ring->spec(v).parity)) p = p + Parity::odd;
      }
      if (p != parity) mono *= SuperPoly::variable(ring, ring->id("theta"));
      out += mono;
    }
    return out;
  }

  NumericMatrix matrix(BlockShape shape, Parity parity) {
    NumericMatrix m(shape);
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c)
        if (shape.row_parity(r) + shape.col_parity(c) == parity && integer(0, 3) != 0) m(r, c) = scalar();
    return m;
  }
};

Parity parity_of(const SuperPoly& p) { return p.homogeneity() == Homogeneity::odd ? Parity::odd : Parity::even; }

RingPtr test_ring() {
  return RingContext::create({{"x", Parity::even, 0},
                              {"y", Parity::even, 0},
                              {"xi", Parity::odd, 0},
                              {"eta", Parity::odd, 0},
                              {"zeta", Parity::odd, 0},
                              {"theta", Parity::odd, 0}});
}

}  // namespace

TEST_CASE("supercommutativity") {
  Gen g(101);
  const RingPtr ring = test_ring();
  for (int t = 0; t < 100; ++t) {
    const Parity pp = g.coin() ? Parity::odd : Parity::even;
    const Parity pq = g.coin() ? Parity::odd : Parity::even;
    const SuperPoly p = g.poly(ring, pp), q = g.poly(ring, pq);
    const SuperPoly swapped = q * p;
    CHECK(p * q == (is_odd(parity_of(p)) && is_odd(parity_of(q)) ? -swapped : swapped));
  }
}

TEST_CASE("repeated odd generators vanish") {
  Gen g(102);
  const RingPtr ring = test_ring();
  for (int t = 0; t < 50; ++t) {
    const SuperPoly xi = SuperPoly::variable(ring, "xi");
    CHECK((g.poly(ring, Parity::even) * xi * g.poly(ring, Parity::even) * xi).is_zero());
    const SuperPoly odd = g.poly(ring, Parity::odd);
    CHECK((odd * odd).is_zero());
  }
}

TEST_CASE("odd derivatives anticommute") {
  Gen g(103);
  const RingPtr ring = test_ring();
  const std::vector<VarId> odd{ring->id("xi"), ring->id("eta"), ring->id("zeta"), ring->id("theta")};
  for (int t = 0; t < 100; ++t) {
    const SuperPoly p = g.poly(ring, g.coin() ? Parity::odd : Parity::even);
    for (VarId a : odd) {
      CHECK(p.left_derivative(a).left_derivative(a).is_zero());
      for (VarId b : odd)
        if (a != b) CHECK(p.left_derivative(a).left_derivative(b) == -p.left_derivative(b).left_derivative(a));
    }
  }
}

TEST_CASE("substitution is a ring homomorphism") {
  Gen g(104);
  const RingPtr ring = test_ring();
  for (int t = 0; t < 50; ++t) {
    const std::map<VarId, SuperPoly> b{{ring->id("x"), g.poly(ring, Parity::even)},
                                       {ring->id("eta"), g.poly(ring, Parity::odd)}};
    const SuperPoly p = g.poly(ring, Parity::even), q = g.poly(ring, Parity::odd);
    CHECK(substitute(p * q, b) == substitute(p, b) * substitute(q, b));
  }
}

TEST_CASE("supertranspose product rule") {
  Gen g(105);
  for (int t = 0; t < 100; ++t) {
    const BlockShape s = BlockShape::square(g.integer(1, 3), g.integer(1, 3));
    const Parity pm = g.coin() ? Parity::odd : Parity::even;
    const Parity pn = g.coin() ? Parity::odd : Parity::even;
    const NumericMatrix m = g.matrix(s, pm), n = g.matrix(s, pn);
    const NumericMatrix rhs = supertranspose(n) * supertranspose(m);
    CHECK(supertranspose(m * n) == (is_odd(pm) && is_odd(pn) ? -rhs : rhs));
  }
}

TEST_CASE("bracket parity and super-Jacobi on random triples") {
  Gen g(106);
  const BlockShape s = BlockShape::square(2, 2);
  for (int t = 0; t < 60; ++t) {
    const Parity pa = g.coin() ? Parity::odd : Parity::even;
    const Parity pb = g.coin() ? Parity::odd : Parity::even;
    const Parity pc = g.coin() ? Parity::odd : Parity::even;
    const NumericMatrix a = g.matrix(s, pa), b = g.matrix(s, pb), c = g.matrix(s, pc);
    const NumericMatrix ab = superbracket(a, b);
    if (!ab.is_zero()) CHECK(ab.parity() == pa + pb);
    const NumericMatrix sign_term = superbracket(b, superbracket(a, c));
    CHECK(superbracket(a, superbracket(b, c)) ==
          superbracket(ab, c) + (is_odd(pa) && is_odd(pb) ? -sign_term : sign_term));
  }
}

TEST_CASE("brackets of osp members stay in osp") {
  Gen g(107);
  const OspBasis b = basis(OspFlavor::odd, 1, 1);
  for (int t = 0; t < 30; ++t) {
    const auto& x = b.generators[g.integer(0, b.size() - 1)];
    const auto& y = b.generators[g.integer(0, b.size() - 1)];
    CHECK(is_member(superbracket(x.matrix, y.matrix), b.form));
  }
}

TEST_CASE("inversion is two-sided") {
  Gen g(108);
  const RingPtr ring = RingContext::create({{"tau1", Parity::odd, 0},
                                            {"tau2", Parity::odd, 0},
                                            {"tau3", Parity::odd, 0},
                                            {"t", Parity::even, 2}});
  std::vector<SuperPoly> tau;
  for (const char* name : {"tau1", "tau2", "tau3"}) tau.push_back(SuperPoly::variable(ring, name));
  const SuperPoly tt = SuperPoly::variable(ring, "t");
  for (int trial = 0; trial < 30; ++trial) {
    const BlockShape s = BlockShape::square(g.integer(1, 3), g.integer(1, 2));
    NumericMatrix body;
    do {
      body = g.matrix(s, Parity::even);
    } while ([&] {
      try {
        invert(body);
        return false;
      } catch (const std::domain_error&) {
        return true;
      }
    }());
    const NumericMatrix inv_body = invert(body);
    CHECK(body * inv_body == NumericMatrix::identity(s));
    CHECK(inv_body * body == NumericMatrix::identity(s));

    SuperMatrix m = to_symbolic(body);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      for (std::size_t c = 0; c < m.cols(); ++c) {
        if (is_odd(s.row_parity(r) + s.col_parity(c))) {
          m(r, c) += SuperPoly(g.scalar()) * tau[g.integer(0, 2)];
        } else if (g.integer(0, 2) == 0) {
          m(r, c) += SuperPoly(g.scalar()) * tau[0] * tau[1] + SuperPoly(g.scalar()) * tt;
        }
      }
    }
    const SuperMatrix mi = invert(m);
    CHECK(m * mi == SuperMatrix::identity(s));
    CHECK(mi * m == SuperMatrix::identity(s));
  }
}

TEST_CASE("dominance agrees with the simple-root criterion") {
  for (std::size_t s = 0; s <= 3; ++s) {
    for (std::size_t n = 0; n <= 3; ++n) {
      const RootSystem rs = root_system(s, n);
      std::vector<long> coords(s + n, -3);
      std::size_t disagreements = 0;
      while (true) {
        const Weight w{{coords.begin(), coords.begin() + s}, {coords.begin() + s, coords.end()}};
        if (is_dominant(w, rs) != is_dominant_simple(w, rs)) ++disagreements;
        std::size_t k = 0;
        while (k < coords.size() && coords[k] == 3) coords[k++] = -3;
        if (k == coords.size()) break;
        ++coords[k];
      }
      CHECK(disagreements == 0);
    }
  }
}

TEST_CASE("dominance is scale invariant") {
  Gen g(109);
  for (int t = 0; t < 300; ++t) {
    const std::size_t s = g.integer(0, 3), n = g.integer(0, 3);
    Weight w = Weight::zero(s, n);
    for (auto& c : w.mu) c = g.integer(-3, 3);
    for (auto& c : w.lambda) c = g.integer(-3, 3);
    const RootSystem rs = root_system(s, n);
    const long c = g.integer(1, 6);
    CHECK(is_dominant(c * w, rs) == is_dominant(w, rs));
  }
}
