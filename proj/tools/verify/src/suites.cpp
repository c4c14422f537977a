#include "superflag/verify/suites.hpp"

#include <cstdlib>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "superflag/flag_charts.hpp"
#include "superflag/linear_span.hpp"
#include "superflag/osp_algebra.hpp"
#include "superflag/root_weights.hpp"

namespace superflag::verify {

namespace {

std::string join(const std::vector<std::size_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out;
}

void require_size(std::size_t value, const char* what) {
  const std::size_t bound = max_size_from_env();
  if (value > bound)
    throw SizeLimitError(std::string(what) + " = " + std::to_string(value) + " exceeds the size bound " +
                         std::to_string(bound));
}

SpanBasis span_of(const std::vector<NumericMatrix>& ms) {
  SpanBasis s;
  for (const auto& m : ms) s.add(flatten(m));
  return s;
}

/// Splits a symbolic matrix into numeric coefficient matrices, one per monomial.
std::map<std::string, NumericMatrix> by_monomial(const SuperMatrix& x) {
  std::map<std::string, NumericMatrix> out;
  for (std::size_t r = 0; r < x.rows(); ++r) {
    for (std::size_t c = 0; c < x.cols(); ++c) {
      for (const auto& [mono, coef] : x(r, c).terms()) {
        SuperPoly unit;
        if (x(r, c).ring()) {
          unit = SuperPoly(FieldScalar(1));
          for (const auto& [v, e] : mono.even)
            for (unsigned k = 0; k < e; ++k) unit *= SuperPoly::variable(x(r, c).ring(), v);
          for (VarId v : mono.odd) unit *= SuperPoly::variable(x(r, c).ring(), v);
        }
        const std::string key = x(r, c).ring() ? unit.to_string() : "1";
        auto it = out.try_emplace(key, NumericMatrix(x.shape())).first;
        it->second(r, c) += coef;
      }
    }
  }
  return out;
}

/// First monomial whose coefficient matrix lies outside `span`, if any.
std::optional<std::string> outside_span(const SuperMatrix& x, const SpanBasis& span) {
  for (const auto& [mono, m] : by_monomial(x))
    if (!span.contains(flatten(m))) return mono;
  return std::nullopt;
}

std::string tags_of(const OspBasis& b, std::size_t p, std::size_t q) {
  return "[" + b.generators[p].tag.to_string() + ", " + b.generators[q].tag.to_string() + "]";
}

}  // namespace

std::size_t max_size_from_env() {
  const char* raw = std::getenv("SUPERFLAG_MAX_SIZE");
  if (!raw || !*raw) return 3;
  char* end = nullptr;
  const long v = std::strtol(raw, &end, 10);
  if (*end != '\0' || v <= 0) throw std::invalid_argument("SUPERFLAG_MAX_SIZE must be a positive integer");
  return static_cast<std::size_t>(v);
}

SuiteReport suite_osp_defining(std::size_t m, std::size_t n, bool jacobi) {
  require_size(m, "m");
  require_size(n, "n");
  SuiteReport r;
  r.suite = "osp-defining";
  r.params = {{"m", std::to_string(m)}, {"n", std::to_string(n)}};
  SuiteTimer timer(r);
  const OspBasis b = basis(OspFlavor::odd, m, n);
  const std::size_t even = m * (2 * m + 1) + n * (2 * n + 1), odd = 2 * n * (2 * m + 1);
  r.add("generator-count", "one generator per free block parameter",
        b.count(Parity::even) == even && b.count(Parity::odd) == odd,
        std::to_string(b.count(Parity::even)) + " even + " + std::to_string(b.count(Parity::odd)) + " odd, expected " +
            std::to_string(even) + " + " + std::to_string(odd));

  std::string bad;
  for (const auto& g : b.generators)
    if (!is_member(g.matrix, b.form)) {
      bad = g.tag.to_string();
      break;
    }
  r.add("membership", "M^ST Gamma + Gamma M = 0", bad.empty(), bad.empty() ? "all generators" : "fails on " + bad);

  const SpanBasis span = span_of(b.matrices());
  r.add("independence", "generators form a basis", span.rank() == b.size(),
        "rank " + std::to_string(span.rank()) + " of " + std::to_string(b.size()));

  const ClosureReport closure = closure_check(b);
  r.add("closure", "superbracket closes on the basis", closure.closed(),
        closure.closed() ? std::to_string(closure.pairs_checked) + " pairs"
                         : "bracket " + tags_of(b, closure.failure->first, closure.failure->second) + " leaves the span");

  if (jacobi) {
    const JacobiReport jr = jacobi_check(b.matrices());
    std::string w = std::to_string(jr.triples_checked) + " triples";
    if (!jr.holds())
      w = "fails on " + b.generators[(*jr.failure)[0]].tag.to_string() + ", " +
          b.generators[(*jr.failure)[1]].tag.to_string() + ", " + b.generators[(*jr.failure)[2]].tag.to_string();
    r.add("jacobi", "super-Jacobi identity", jr.holds(), w);
  }

  const auto c = center(b.matrices());
  r.add("center", "the center is trivial", c.empty(), "center dimension " + std::to_string(c.size()));
  return r;
}

std::pair<std::vector<std::size_t>, std::vector<std::size_t>> default_tail(std::size_t k1, std::size_t l1) {
  if (k1 >= 2) return {{1}, {0}};
  if (l1 >= 2) return {{0}, {l1 - 1}};
  return {{}, {}};
}

SuiteReport suite_lemma_fields(std::size_t k1, std::size_t l1, const std::vector<std::size_t>& tail_k,
                               const std::vector<std::size_t>& tail_l) {
  require_size(k1, "k1");
  require_size(l1, "l1");
  SuiteReport r;
  r.suite = "lemma-fields";
  r.params = {{"k1", std::to_string(k1)}, {"l1", std::to_string(l1)}, {"tail_k", join(tail_k)}, {"tail_l", join(tail_l)}};
  SuiteTimer timer(r);
  const IsotropicChart ic = isotropic_chart(k1, l1, tail_k, tail_l);
  const RingPtr& ring = ic.chart.ring;
  const OspBasis b = basis(OspFlavor::odd, k1 - 1, l1);
  const std::size_t m = k1 - 1;
  auto var = [&](const std::string& name) { return SuperPoly::variable(ring, name); };
  auto id = [&](const std::string& name) { return ring->id(name); };

  for (std::size_t i = 1; i <= l1; ++i) {
    VectorField expected{ring, Parity::odd, {}};
    expected.coefficients.emplace(id("xi1_" + std::to_string(i)), SuperPoly(FieldScalar(1)));
    for (std::size_t j = 1; j <= m; ++j)
      expected.coefficients.emplace(id("eta1_" + std::to_string(i) + "_" + std::to_string(j)),
                                    -var("x1_" + std::to_string(j)));
    for (std::size_t j = 1; j <= i; ++j)
      expected.coefficients.emplace(id("y1_" + std::to_string(i) + "_" + std::to_string(j)),
                                    -var("xi1_" + std::to_string(j)));
    const auto g = b.find({"G4", i, 0});
    const VectorField got = fundamental_field(b.generators.at(*g).matrix, ic.chart);
    const bool ok = got == expected;
    r.add("h" + std::to_string(i), "h_i is the fundamental field of the odd one-parameter subgroup", ok,
          ok ? got.to_string() : "got " + got.to_string() + "; expected " + expected.to_string());
  }
  for (std::size_t a = 1; a <= l1; ++a) {
    for (std::size_t bb = 1; bb <= m; ++bb) {
      const std::string name = "eta1_" + std::to_string(a) + "_" + std::to_string(bb);
      VectorField expected{ring, Parity::odd, {{id(name), SuperPoly(FieldScalar(1))}}};
      const auto g = b.find({"C12", bb, a});
      const VectorField got = fundamental_field(-b.generators.at(*g).matrix, ic.chart);
      const bool ok = got == expected && got.coefficients.size() == 1;
      r.add("d/d" + name, "coordinate field d/deta_ab is fundamental", ok,
            ok ? got.to_string() : "got " + got.to_string() + "; expected " + expected.to_string());
    }
  }
  return r;
}

SuiteReport suite_isotropy(std::size_t k1, std::size_t l1) {
  require_size(k1, "k1");
  require_size(l1, "l1");
  SuiteReport r;
  r.suite = "isotropy";
  r.params = {{"k1", std::to_string(k1)}, {"l1", std::to_string(l1)}};
  SuiteTimer timer(r);
  const IsotropicChart ic = isotropic_chart(k1, l1);
  const SuperMatrix residual = ic.isotropy_residual();
  r.add("residual", "Z^ST Gamma Z = 0 after solving the dependent coordinates", residual.is_zero(),
        residual.is_zero() ? "zero" : to_string(residual));

  const OspBasis b = basis(OspFlavor::odd, k1 - 1, l1);
  std::string bad;
  for (const auto& g : b.generators) {
    const auto linear = first_order_action(g.matrix, ic.chart);
    const VectorField nu = fundamental_field(g.matrix, ic.chart);
    for (const auto& pos : ic.dependent_positions) {
      const SuperPoly lhs = linear.front()(pos.row, pos.col);
      const SuperPoly rhs = nu.apply(ic.dependent.at(pos.var));
      if (!(lhs == rhs)) {
        bad = g.tag.to_string() + " on " + ic.chart.ring->spec(pos.var).name;
        break;
      }
    }
    if (!bad.empty()) break;
  }
  r.add("tangency", "fundamental fields annihilate the defining relations", bad.empty(),
        bad.empty() ? std::to_string(b.size()) + " fields, " + std::to_string(ic.dependent_positions.size()) + " relations"
                    : "fails for " + bad);
  return r;
}


SuiteReport suite_bwb(std::size_t k1, std::size_t l1) {
  SuiteReport r;
  r.suite = "bwb";
  r.params = {{"k1", std::to_string(k1)}, {"l1", std::to_string(l1)}};
  SuiteTimer timer(r);
  const RootSystem rs = root_system(k1 - 1, l1);
  const auto weights = psi_highest_weights(k1, l1);
  bool criteria_agree = true;
  for (const auto& w : weights) {
    const auto bad = violating_root(w, rs);
    const bool dominant = !bad;
    criteria_agree = criteria_agree && dominant == is_dominant_simple(w, rs);
    const std::string witness = dominant ? "dominant"
                                         : "(w, " + bad->to_string() + ") = " + std::to_string(dot(w, *bad)) + " < 0";
    r.add("weight " + w.to_string(), "only the zero weight is dominant", dominant == w.is_zero(), witness);
  }
  r.add("simple-roots", "dominance by simple roots agrees with all positive roots", criteria_agree,
        std::to_string(weights.size()) + " weights");
  const std::string expected = k1 >= 2 ? "ℂ" : "{0}";
  std::string got;
  try {
    got = w0_fiber_description(k1, l1);
  } catch (const std::logic_error& e) {
    got = e.what();
  }
  r.add("fiber", "H^0 is the trivial module for k1 >= 2 and zero for k1 = 1", got == expected,
        "H^0 = " + got + ", expected " + expected);
  return r;
}

SuiteReport suite_isomorphism(std::size_t k1, std::size_t l1, bool parabolics) {
  require_size(k1, "k1");
  require_size(l1, "l1");
  SuiteReport r;
  r.suite = "isomorphism";
  r.params = {{"k1", std::to_string(k1)}, {"l1", std::to_string(l1)}};
  SuiteTimer timer(r);

  for (const OspFlavor flavor : {OspFlavor::odd, OspFlavor::even}) {
    const std::string label = flavor == OspFlavor::odd ? "odd" : "even";
    const std::size_t m = flavor == OspFlavor::odd ? k1 - 1 : k1;
    const std::size_t t = flavor == OspFlavor::odd ? 2 * k1 - 1 : 2 * k1;
    const GramForm gamma = gram_form(flavor, m, l1);
    const GramForm primed = gram_form(OspFlavor::primed, t, l1);
    const NumericMatrix s = basis_change_S(flavor, k1, l1);
    const bool form_ok = supertranspose(s) * gamma.matrix * s == primed.matrix;
    r.add(label + "/basis-change", "Gamma' = S^ST Gamma S", form_ok, "t = " + std::to_string(t));

    const OspBasis source = basis(flavor, m, l1);
    const OspBasis target = basis(OspFlavor::primed, t, l1);
    const NumericMatrix s_inv = invert(s);
    std::vector<NumericMatrix> images;
    std::string bad;
    for (const auto& g : source.generators) {
      images.push_back(conjugate_to_primed(g.matrix, s));
      if (bad.empty() && !is_member(images.back(), primed)) bad = g.tag.to_string();
    }
    for (const auto& g : target.generators)
      if (bad.empty() && !is_member(s * g.matrix * s_inv, gamma)) bad = "inverse image of " + g.tag.to_string();
    const SpanBasis image_span = span_of(images);
    const bool bijective = bad.empty() && image_span.rank() == source.size() && target.size() == source.size();
    r.add(label + "/conjugation", "X -> S^-1 X S is a bijection osp(Gamma) -> osp(Gamma')", bijective,
          bad.empty() ? "rank " + std::to_string(image_span.rank()) + ", dim " + std::to_string(target.size())
                      : "not a member: " + bad);

    std::string broken;
    for (std::size_t p = 0; p < source.size() && broken.empty(); ++p)
      for (std::size_t q = p; q < source.size() && broken.empty(); ++q)
        if (!(conjugate_to_primed(superbracket(source.generators[p].matrix, source.generators[q].matrix), s) ==
              superbracket(images[p], images[q])))
          broken = tags_of(source, p, q);
    r.add(label + "/conjugation-bracket", "conjugation preserves superbrackets", broken.empty(),
          broken.empty() ? "all basis pairs" : "fails on " + broken);
  }

  // The embedding j of primed osp(2k1-1|2l1) into primed osp(2k1|2l1).
  const OspBasis small = basis(OspFlavor::primed, 2 * k1 - 1, l1);
  const OspBasis big = basis(OspFlavor::primed, 2 * k1, l1);
  const GramForm big_form = gram_form(OspFlavor::primed, 2 * k1, l1);
  std::vector<NumericMatrix> embedded;
  std::string bad;
  for (const auto& g : small.generators) {
    embedded.push_back(embed_j(g.matrix));
    if (bad.empty() && !(is_member(embedded.back(), big_form) && in_j_image(embedded.back()))) bad = g.tag.to_string();
  }
  const SpanBasis j_span = span_of(embedded);
  r.add("j/injective", "dj is injective with values in osp(2k1|2l1)", bad.empty() && j_span.rank() == small.size(),
        bad.empty() ? "rank " + std::to_string(j_span.rank()) : "bad image of " + bad);

  std::string broken;
  for (std::size_t p = 0; p < small.size() && broken.empty(); ++p)
    for (std::size_t q = p; q < small.size() && broken.empty(); ++q)
      if (!(embed_j(superbracket(small.generators[p].matrix, small.generators[q].matrix)) ==
            superbracket(embedded[p], embedded[q])))
        broken = tags_of(small, p, q);
  r.add("j/bracket", "dj preserves superbrackets", broken.empty(), broken.empty() ? "all basis pairs" : "fails on " + broken);

  // Members of osp(2k1|2l1) with vanishing first row and column.
  SpanBasis border;
  for (const auto& g : big.generators) {
    SparseVector v;
    const NumericMatrix& x = g.matrix;
    for (std::size_t c = 0; c < x.cols(); ++c)
      if (!x(0, c).is_zero()) v[c] = x(0, c);
    for (std::size_t rr = 1; rr < x.rows(); ++rr)
      if (!x(rr, 0).is_zero()) v[x.cols() + rr] = x(rr, 0);
    border.add(v);
  }
  const std::size_t slice = big.size() - border.rank();
  r.add("j/image", "the j-image is the vanishing first row and column slice", slice == j_span.rank(),
        "slice dimension " + std::to_string(slice) + ", image dimension " + std::to_string(j_span.rank()));

  if (parabolics) {
    const OspBasis p_std = parabolic_basis(Parabolic::p, k1, l1);
    const OspBasis p1_std = parabolic_basis(Parabolic::p1, k1, l1);
    r.add("p/closed", "p is a subalgebra", closure_check(p_std).closed(), std::to_string(p_std.size()) + " generators");
    r.add("p1/closed", "p1 is a subalgebra", closure_check(p1_std).closed(),
          std::to_string(p1_std.size()) + " generators");
    const OspBasis p = parabolic_basis(Parabolic::p, k1, l1, Layout::primed);
    const OspBasis p1 = parabolic_basis(Parabolic::p1, k1, l1, Layout::primed);
    const SpanBasis p1_span = span_of(p1.matrices());
    std::string outside;
    for (const auto& g : p.generators)
      if (outside.empty() && !p1_span.contains(flatten(embed_j(g.matrix)))) outside = g.tag.to_string();
    r.add("j/parabolic", "dj(p) is contained in p1", outside.empty(),
          outside.empty() ? std::to_string(p.size()) + " generators" : "dj(" + outside + ") is not in p1");
  }
  return r;
}

SuiteReport suite_imP_witness(std::size_t k1, std::size_t l1) {
  require_size(k1, "k1");
  require_size(l1, "l1");
  SuiteReport r;
  r.suite = "imp-witness";
  r.params = {{"k1", std::to_string(k1)}, {"l1", std::to_string(l1)}};
  SuiteTimer timer(r);

  std::vector<VariableSpec> specs;
  auto declare_block = [&](const std::string& stem, std::size_t rows) {
    for (std::size_t s = 1; s <= rows; ++s)
      for (std::size_t u = 1; u <= l1; ++u)
        specs.push_back({stem + "_" + std::to_string(s) + "_" + std::to_string(u), Parity::odd, 0});
  };
  for (const char* stem : {"a1", "a2"}) declare_block(stem, k1);
  for (const char* stem : {"b1", "b2"}) declare_block(stem, 1);  // only the first row is nonzero
  for (const char* stem : {"c1", "c2"}) declare_block(stem, k1);
  const RingPtr ring = RingContext::create(specs);

  auto block = [&](const std::string& stem, std::size_t rows) {
    SuperMatrix out(BlockShape{k1, 0, l1, 0});
    for (std::size_t s = 1; s <= rows; ++s)
      for (std::size_t u = 1; u <= l1; ++u)
        out(s - 1, u - 1) = SuperPoly::variable(ring, stem + "_" + std::to_string(s) + "_" + std::to_string(u));
    return out;
  };
  const BlockShape shape = BlockShape::square(2 * k1, 2 * l1);
  const std::size_t row1 = 0, row2 = k1, row3 = 2 * k1, row4 = 2 * k1 + l1;
  auto place = [](SuperMatrix& into, std::size_t r0, std::size_t c0, const SuperMatrix& b) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) into(r0 + i, c0 + j) = b(i, j);
  };
  auto first_factor = [&](const SuperMatrix& a1, const SuperMatrix& a2) {
    SuperMatrix x(shape);
    place(x, row2, row3, a1);
    place(x, row2, row4, a2);
    place(x, row3, row2, -transpose(a2));
    place(x, row4, row2, transpose(a1));
    return x;
  };
  const SuperMatrix a1 = block("a1", k1), a2 = block("a2", k1);
  const SuperMatrix b1 = block("b1", 1), b2 = block("b2", 1);
  const SuperMatrix x = first_factor(a1, a2);
  SuperMatrix y(shape);
  place(y, row1, row3, b1);
  place(y, row1, row4, b2);
  place(y, row3, row1, -transpose(b2));
  place(y, row4, row1, transpose(b1));

  SuperMatrix expected(shape);
  place(expected, row1, row2, -(b2 * transpose(a1)) + b1 * transpose(a2));
  place(expected, row2, row1, -(a1 * transpose(b2)) + a2 * transpose(b1));

  const GramForm form = gram_form(OspFlavor::primed, 2 * k1, l1);
  const OspBasis small = basis(OspFlavor::primed, 2 * k1 - 1, l1);
  SpanBasis j_all, j_even;
  for (const auto& g : small.generators) {
    const SparseVector v = flatten(embed_j(g.matrix));
    j_all.add(v);
    if (g.parity == Parity::even) j_even.add(v);
  }

  r.add("factors", "both factors have odd entries in the odd blocks",
        x.parity() == Parity::even && y.parity() == Parity::even, "parity of each factor over the Grassmann algebra is even");
  const SuperMatrix bracket = superbracket(x, y);
  r.add("bracket", "the commutator equals (0, -B2 A1^T + B1 A2^T; -A1 B2^T + A2 B1^T, 0) + 0", bracket == expected,
        to_string(bracket));
  const auto x_out = outside_span(x, j_all);
  r.add("first-in-image", "the first factor lies in the j-image", is_member(x, form) && !x_out,
        x_out ? "coefficient of " + *x_out + " is outside" : "every coefficient is in the j-image");
  const auto y_out = outside_span(y, j_all);
  r.add("second-outside-image", "the second factor is in osp(2k1|2l1) but not in the j-image",
        is_member(y, form) && y_out.has_value(), y_out ? "coefficient of " + *y_out + " is outside" : "inside");

  bool even_members = bracket.parity() == Parity::even && is_member(bracket, form);
  for (const auto& [mono, coef] : by_monomial(bracket))
    even_members = even_members && coef.parity() == Parity::even && is_member(coef, form);
  const auto out = outside_span(bracket, j_even);
  r.add("bracket-outside-image", "the commutator is in osp(2k1|2l1)_0 but not in the even j-image",
        even_members && out.has_value(),
        out ? "no solution for the coefficient of " + *out : "every coefficient is in the even j-image");

  const SuperMatrix control = superbracket(x, first_factor(block("c1", k1), block("c2", k1)));
  const auto control_out = outside_span(control, j_even);
  r.add("control", "the commutator of two first factors stays in the even j-image", !control_out,
        control_out ? "coefficient of " + *control_out + " is outside" : "inside");
  return r;
}

namespace {

/// Numeric body preserving the identity rows `fixed`, plus odd-parameter
/// nilpotents.
SuperMatrix random_group_element(std::mt19937_64& rng, const RingPtr& ring, const std::vector<VarId>& params,
                                 BlockShape shape, const std::set<std::size_t>& fixed) {
  std::uniform_int_distribution<int> coef(-2, 2);
  std::uniform_int_distribution<int> coin(0, 2);
  NumericMatrix body(shape);
  for (;;) {
    for (std::size_t r = 0; r < shape.rows(); ++r)
      for (std::size_t c = 0; c < shape.cols(); ++c) {
        const bool same = shape.row_parity(r) == shape.col_parity(c);
        const bool blocked = fixed.count(r) && !fixed.count(c);
        body(r, c) = same && !blocked ? FieldScalar(coef(rng)) : FieldScalar();
      }
    try {
      invert(body);
      break;
    } catch (const std::domain_error&) {
    }
  }
  SuperMatrix l = to_symbolic(body);
  for (std::size_t r = 0; r < shape.rows(); ++r) {
    for (std::size_t c = 0; c < shape.cols(); ++c) {
      if (shape.row_parity(r) == shape.col_parity(c)) {
        if (coin(rng) == 0) {
          const std::size_t a = rng() % params.size(), b = rng() % params.size();
          if (a != b) l(r, c) += SuperPoly(FieldScalar(coef(rng))) * SuperPoly::variable(ring, params[a]) *
                                 SuperPoly::variable(ring, params[b]);
        }
      } else {
        for (VarId p : params)
          if (coin(rng) == 0) l(r, c) += SuperPoly(FieldScalar(coef(rng))) * SuperPoly::variable(ring, p);
      }
    }
  }
  return l;
}

}  // namespace

SuiteReport suite_action(std::uint64_t seed, std::size_t samples) {
  SuiteReport r;
  r.suite = "action";
  r.params = {{"k", "3,1"}, {"l", "2,1"}, {"seed", std::to_string(seed)}, {"samples", std::to_string(samples)}};
  SuiteTimer timer(r);
  const FlagType ft = validate_flag_type({3, 1}, {2, 1});
  const auto sets = default_index_sets(ft);
  std::vector<VariableSpec> specs;
  for (int a = 1; a <= 4; ++a) specs.push_back({"tau" + std::to_string(a), Parity::odd, 0});
  const Chart c = build_chart(ft, sets, RingContext::create(specs));
  std::vector<VarId> params;
  for (const auto& s : specs) params.push_back(c.ring->id(s.name));
  const BlockShape shape = BlockShape::square(ft.m(), ft.n());
  std::set<std::size_t> fixed;
  for (std::size_t e : sets.front().even) fixed.insert(e - 1);
  for (std::size_t o : sets.front().odd) fixed.insert(ft.m() + o - 1);

  const ChartPoint same = act(SuperMatrix::identity(shape), c);
  r.add("identity", "act(E, Z) = Z", same.matrices == c.matrices, c.to_string());

  std::mt19937_64 rng(seed);
  std::size_t failures = 0;
  std::string first;
  for (std::size_t k = 0; k < samples; ++k) {
    const SuperMatrix l = random_group_element(rng, c.ring, params, shape, fixed);
    const SuperMatrix l2 = random_group_element(rng, c.ring, params, shape, fixed);
    const ChartPoint lhs = act(l2, act(l, c));
    const ChartPoint rhs = act(l2 * l, c);
    if (!(lhs.matrices == rhs.matrices)) {
      if (failures++ == 0) first = "sample " + std::to_string(k) + ": L = " + to_string(l) + ", L' = " + to_string(l2);
    }
  }
  r.add("composition", "act(L', act(L, Z)) = act(L'L, Z)", failures == 0,
        failures == 0 ? std::to_string(samples) + " random pairs" : std::to_string(failures) + " failures; " + first);
  return r;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"osp-defining", "lemma-fields", "isotropy",  "bwb",
                                              "isomorphism",  "imp-witness",  "action"};
  return names;
}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::uint64_t parse_count(const std::string& value, std::size_t line, const std::string& key) {
  if (value.empty() || value.find_first_not_of("0123456789") != std::string::npos)
    throw ConfigError(line, key + " expects a non-negative integer, got '" + value + "'");
  try {
    return std::stoull(value);
  } catch (const std::out_of_range&) {
    throw ConfigError(line, key + " is out of range");
  }
}

}  // namespace

RunConfig parse_config(const std::string& text, RunConfig base) {
  std::istringstream in(text);
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const std::string content = trim(raw.substr(0, raw.find('#')));
    if (content.empty()) continue;
    const auto eq = content.find('=');
    if (eq == std::string::npos) throw ConfigError(line, "expected 'key = value'");
    const std::string key = trim(content.substr(0, eq));
    const std::string value = trim(content.substr(eq + 1));
    if (key == "suites") {
      base.suites.clear();
      std::istringstream list(value);
      std::string name;
      while (std::getline(list, name, ',')) {
        name = trim(name);
        if (name.empty()) continue;
        bool known = false;
        for (const auto& s : suite_names()) known = known || s == name;
        if (!known) throw ConfigError(line, "unknown suite '" + name + "'");
        base.suites.push_back(name);
      }
    } else if (key == "max_size") {
      base.max_size = parse_count(value, line, key);
    } else if (key == "jacobi_max") {
      base.jacobi_max = parse_count(value, line, key);
    } else if (key == "parabolic_max") {
      base.parabolic_max = parse_count(value, line, key);
    } else if (key == "seed") {
      base.seed = parse_count(value, line, key);
    } else if (key == "action_samples") {
      base.action_samples = parse_count(value, line, key);
    } else {
      throw ConfigError(line, "unknown key '" + key + "'");
    }
  }
  return base;
}

std::vector<SuiteReport> run_all(const RunConfig& config) {
  const std::size_t bound = std::min(config.max_size, max_size_from_env());
  auto selected = [&](const std::string& name) {
    if (config.suites.empty()) return true;
    for (const auto& s : config.suites)
      if (s == name) return true;
    return false;
  };
  std::vector<SuiteReport> out;
  if (selected("osp-defining"))
    for (std::size_t m = 0; m <= bound; ++m)
      for (std::size_t n = 0; n <= bound; ++n)
        if (m + n > 0) out.push_back(suite_osp_defining(m, n, m <= config.jacobi_max && n <= config.jacobi_max));
  if (selected("lemma-fields"))
    for (std::size_t k1 = 1; k1 <= bound; ++k1)
      for (std::size_t l1 = 1; l1 <= bound; ++l1) {
        const auto [tk, tl] = default_tail(k1, l1);
        out.push_back(suite_lemma_fields(k1, l1, tk, tl));
      }
  if (selected("isotropy"))
    for (std::size_t k1 = 1; k1 <= bound; ++k1)
      for (std::size_t l1 = 1; l1 <= bound; ++l1) out.push_back(suite_isotropy(k1, l1));
  if (selected("bwb"))
    for (std::size_t k1 = 1; k1 <= 6; ++k1)
      for (std::size_t l1 = 1; l1 <= 4; ++l1) out.push_back(suite_bwb(k1, l1));
  if (selected("isomorphism"))
    for (std::size_t k1 = 1; k1 <= bound; ++k1)
      for (std::size_t l1 = 1; l1 <= bound; ++l1)
        out.push_back(suite_isomorphism(k1, l1, k1 <= config.parabolic_max && l1 <= config.parabolic_max));
  if (selected("imp-witness"))
    for (std::size_t k1 = 1; k1 <= bound; ++k1)
      for (std::size_t l1 = 1; l1 <= bound; ++l1) out.push_back(suite_imP_witness(k1, l1));
  if (selected("action")) out.push_back(suite_action(config.seed, config.action_samples));
  return out;
}

}  // namespace superflag::verify
