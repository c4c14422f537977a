#include "superflag/flag_charts.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "superflag/detail/expr_parser.hpp"
#include "superflag/osp_algebra.hpp"

namespace superflag {

namespace {

std::string join(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(v[k]);
  }
  return s;
}

std::vector<std::size_t> parse_list(std::string_view text) {
  std::vector<std::size_t> out;
  text = detail::trim(text);
  if (text.empty()) return out;
  for (auto part : detail::split_top_level(text, ',')) {
    part = detail::trim(part);
    if (part.empty()) throw std::invalid_argument("empty entry in list '" + std::string(text) + "'");
    std::size_t v = 0;
    for (char ch : part) {
      if (ch < '0' || ch > '9') throw std::invalid_argument("not a non-negative integer: '" + std::string(part) + "'");
      v = v * 10 + static_cast<std::size_t>(ch - '0');
    }
    out.push_back(v);
  }
  return out;
}

}  // namespace

bool FlagType::is_purely_even() const { return n() == 0; }

std::pair<std::size_t, std::size_t> FlagType::dimension() const {
  std::size_t even = 0;
  std::size_t odd = 0;
  for (std::size_t s = 1; s <= r(); ++s) {
    even += (k[s - 1] - k[s]) * k[s] + (l[s - 1] - l[s]) * l[s];
    odd += (k[s - 1] - k[s]) * l[s] + (l[s - 1] - l[s]) * k[s];
  }
  return {even, odd};
}

std::string FlagType::to_string() const { return "k=" + join(k) + " l=" + join(l); }

FlagType validate_flag_type(std::vector<std::size_t> k, std::vector<std::size_t> l) {
  if (k.size() != l.size()) throw std::invalid_argument("k and l must have the same length");
  if (k.size() < 2) throw std::invalid_argument("a flag type needs at least two entries (k_0, k_1)");
  for (std::size_t s = 1; s < k.size(); ++s) {
    if (k[s] > k[s - 1]) throw std::invalid_argument("k must be non-increasing (k_" + std::to_string(s) + ")");
    if (l[s] > l[s - 1]) throw std::invalid_argument("l must be non-increasing (l_" + std::to_string(s) + ")");
    if (k[s] + l[s] >= k[s - 1] + l[s - 1])
      throw std::invalid_argument("k_" + std::to_string(s) + " + l_" + std::to_string(s) +
                                  " must be strictly smaller than the previous step");
  }
  if (k.back() + l.back() == 0) throw std::invalid_argument("k_r + l_r must be positive");
  return FlagType{std::move(k), std::move(l)};
}

FlagType parse_flag_type(std::string_view text) {
  std::optional<std::vector<std::size_t>> k;
  std::optional<std::vector<std::size_t>> l;
  std::istringstream in{std::string(text)};
  std::string word;
  while (in >> word) {
    const auto eq = word.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("expected key=value, got '" + word + "'");
    const std::string key = word.substr(0, eq);
    auto values = parse_list(std::string_view(word).substr(eq + 1));
    if (key == "k") k = std::move(values);
    else if (key == "l") l = std::move(values);
    else throw std::invalid_argument("unknown key '" + key + "' in flag type");
  }
  if (!k || !l) throw std::invalid_argument("flag type needs both k=... and l=...");
  return validate_flag_type(std::move(*k), std::move(*l));
}

std::string IndexSet::to_string() const { return join(even) + ";" + join(odd); }

IndexSet parse_index_set(std::string_view text) {
  const auto semi = text.find(';');
  if (semi == std::string_view::npos) return IndexSet{parse_list(text), {}};
  return IndexSet{parse_list(text.substr(0, semi)), parse_list(text.substr(semi + 1))};
}

std::vector<IndexSet> default_index_sets(const FlagType& ft) {
  std::vector<IndexSet> out;
  for (std::size_t s = 1; s <= ft.r(); ++s) {
    IndexSet is;
    for (std::size_t i = 1; i <= ft.k[s]; ++i) is.even.push_back(i);
    for (std::size_t i = 1; i <= ft.l[s]; ++i) is.odd.push_back(i);
    out.push_back(std::move(is));
  }
  return out;
}

std::string ChartPoint::to_string() const {
  std::ostringstream os;
  for (std::size_t s = 0; s < matrices.size(); ++s) {
    if (s) os << '\n';
    os << "Z" << s + 1 << " [I=" << index_sets[s].to_string() << "] = " << superflag::to_string(matrices[s]);
  }
  return os.str();
}

std::optional<ChartCoordinate> Chart::coordinate(std::string_view name) const {
  const auto id = ring->find(name);
  if (!id) return std::nullopt;
  for (const auto& c : coordinates)
    if (c.var == *id) return c;
  return std::nullopt;
}

namespace {

void check_index_set(const IndexSet& is, std::size_t s, std::size_t k_prev, std::size_t l_prev, std::size_t k_s,
                     std::size_t l_s) {
  const std::string where = "I" + std::to_string(s);
  if (is.even.size() != k_s || is.odd.size() != l_s)
    throw std::invalid_argument(where + " must have " + std::to_string(k_s) + " even and " + std::to_string(l_s) +
                                " odd indices");
  auto check = [&](const std::vector<std::size_t>& v, std::size_t bound, const char* part) {
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (v[k] < 1 || v[k] > bound)
        throw std::invalid_argument(where + " " + part + " index " + std::to_string(v[k]) + " outside 1.." +
                                    std::to_string(bound));
      if (k && v[k] <= v[k - 1]) throw std::invalid_argument(where + " " + part + " indices must increase");
    }
  };
  check(is.even, k_prev, "even");
  check(is.odd, l_prev, "odd");
}

/// Identity column held by each row, or -1 for a free row.
std::vector<long> identity_columns(const IndexSet& is, std::size_t k_prev, std::size_t rows) {
  std::vector<long> owner(rows, -1);
  for (std::size_t p = 0; p < is.even.size(); ++p) owner[is.even[p] - 1] = static_cast<long>(p);
  for (std::size_t q = 0; q < is.odd.size(); ++q)
    owner[k_prev + is.odd[q] - 1] = static_cast<long>(is.even.size() + q);
  return owner;
}

struct StepSlot {
  std::size_t step, row, col;
  VarId var;
};

/// Appends the coordinate variables of every step of `ft` to `specs`;
/// `label_offset` shifts the step number in the names.
std::vector<StepSlot> declare_step_variables(const FlagType& ft, const std::vector<IndexSet>& index_sets,
                                             std::size_t label_offset, std::vector<VariableSpec>& specs) {
  std::vector<StepSlot> slots;
  for (std::size_t s = 1; s <= ft.r(); ++s) {
    const std::size_t kp = ft.k[s - 1], lp = ft.l[s - 1], ks = ft.k[s], ls = ft.l[s];
    const auto owner = identity_columns(index_sets[s - 1], kp, kp + lp);
    const std::string tag = std::to_string(s + label_offset);
    for (std::size_t row = 0; row < kp + lp; ++row) {
      if (owner[row] >= 0) continue;
      const bool odd_row = row >= kp;
      const std::size_t bi = (odd_row ? row - kp : row) + 1;
      for (std::size_t col = 0; col < ks + ls; ++col) {
        const bool odd_col = col >= ks;
        const std::size_t bj = (odd_col ? col - ks : col) + 1;
        const char* stem = odd_row ? (odd_col ? "y" : "eta") : (odd_col ? "xi" : "x");
        const Parity parity = odd_row == odd_col ? Parity::even : Parity::odd;
        specs.push_back({std::string(stem) + tag + "_" + std::to_string(bi) + "_" + std::to_string(bj), parity, 0});
        slots.push_back({s - 1, row, col, static_cast<VarId>(specs.size() - 1)});
      }
    }
  }
  return slots;
}

std::vector<SuperMatrix> assemble_steps(const FlagType& ft, const std::vector<IndexSet>& index_sets,
                                        const std::vector<StepSlot>& slots, const RingPtr& ring) {
  std::vector<SuperMatrix> mats;
  for (std::size_t s = 1; s <= ft.r(); ++s) {
    const std::size_t kp = ft.k[s - 1], lp = ft.l[s - 1], ks = ft.k[s], ls = ft.l[s];
    SuperMatrix z(BlockShape{kp, lp, ks, ls});
    const auto owner = identity_columns(index_sets[s - 1], kp, kp + lp);
    for (std::size_t row = 0; row < kp + lp; ++row)
      if (owner[row] >= 0) z(row, static_cast<std::size_t>(owner[row])) = SuperPoly(1);
    mats.push_back(std::move(z));
  }
  for (const auto& slot : slots) mats[slot.step](slot.row, slot.col) = SuperPoly::variable(ring, slot.var);
  return mats;
}

void check_index_sets(const FlagType& ft, const std::vector<IndexSet>& index_sets) {
  if (index_sets.size() != ft.r())
    throw std::invalid_argument("expected " + std::to_string(ft.r()) + " index sets, got " +
                                std::to_string(index_sets.size()));
  for (std::size_t s = 1; s <= ft.r(); ++s)
    check_index_set(index_sets[s - 1], s, ft.k[s - 1], ft.l[s - 1], ft.k[s], ft.l[s]);
}

}  // namespace

Chart build_chart(const FlagType& ft, const std::vector<IndexSet>& index_sets, const RingPtr& base) {
  check_index_sets(ft, index_sets);
  std::vector<VariableSpec> specs = base ? base->variables() : std::vector<VariableSpec>{};
  const auto slots = declare_step_variables(ft, index_sets, 0, specs);
  Chart c;
  c.type = ft;
  c.index_sets = index_sets;
  c.ring = RingContext::create(std::move(specs));
  c.matrices = assemble_steps(ft, index_sets, slots, c.ring);
  for (const auto& slot : slots) c.coordinates.push_back({slot.var, slot.step, slot.row, slot.col});
  return c;
}

ChartPoint act(const SuperMatrix& l, const ChartPoint& c, const std::vector<IndexSet>& targets) {
  const std::vector<IndexSet>& j = targets.empty() ? c.index_sets : targets;
  const FlagType& ft = c.type;
  check_index_sets(ft, j);
  if (!(l.shape() == BlockShape::square(ft.m(), ft.n())))
    throw std::invalid_argument("group element must have shape " + BlockShape::square(ft.m(), ft.n()).to_string());
  ChartPoint out{ft, j, {}};
  SuperMatrix left = l;
  for (std::size_t s = 1; s <= ft.r(); ++s) {
    const SuperMatrix w = left * c.matrices[s - 1];
    std::vector<std::size_t> rows;
    for (std::size_t i : j[s - 1].even) rows.push_back(i - 1);
    for (std::size_t i : j[s - 1].odd) rows.push_back(ft.k[s - 1] + i - 1);
    const SuperMatrix cs = w.select_rows(rows, ft.k[s]);
    SuperMatrix cs_inv;
    try {
      cs_inv = invert(cs);
    } catch (const std::domain_error& e) {
      throw std::domain_error("designated submatrix C" + std::to_string(s) + ": " + e.what());
    }
    out.matrices.push_back(w * cs_inv);
    left = cs;
  }
  return out;
}

SuperPoly VectorField::apply(const SuperPoly& f) const {
  SuperPoly out;
  for (const auto& [v, coef] : coefficients) out += coef * f.left_derivative(v);
  return out;
}

std::string VectorField::to_string() const {
  if (coefficients.empty()) return "0";
  std::string s;
  for (const auto& [v, coef] : coefficients) {
    const std::string d = "d/d" + ring->spec(v).name;
    std::string term;
    bool negative = false;
    if (coef == SuperPoly(1)) {
      term = d;
    } else if (coef == SuperPoly(-1)) {
      term = d;
      negative = true;
    } else if (coef.terms().size() == 1) {
      SuperPoly c = coef;
      if (sgn(coef.terms().begin()->second.rational_part()) < 0 && coef.terms().begin()->second.is_rational()) {
        negative = true;
        c = -coef;
      }
      term = c.to_string() + "*" + d;
    } else {
      term = "(" + coef.to_string() + ")*" + d;
    }
    if (s.empty()) s = negative ? "-" + term : term;
    else s += (negative ? " - " : " + ") + term;
  }
  return s;
}

VectorField bracket(const VectorField& v, const VectorField& w) {
  VectorField out;
  out.ring = v.ring ? v.ring : w.ring;
  out.parity = v.parity + w.parity;
  const bool anti = is_odd(v.parity) && is_odd(w.parity);
  std::map<VarId, SuperPoly> acc;
  for (const auto& [z, c] : w.coefficients) acc[z] += v.apply(c);
  for (const auto& [z, c] : v.coefficients) {
    if (anti) acc[z] += w.apply(c);
    else acc[z] -= w.apply(c);
  }
  for (auto& [z, c] : acc)
    if (!c.is_zero()) out.coefficients.emplace(z, std::move(c));
  return out;
}

std::vector<SuperMatrix> first_order_action(const NumericMatrix& x, const Chart& c) {
  const Parity p = x.parity();
  const RingPtr ring = c.ring->extended({VariableSpec{"t", p, p == Parity::odd ? 0u : 2u}});
  const SuperPoly t = SuperPoly::variable(ring, ring->size() - 1);
  const SuperMatrix l = SuperMatrix::identity(x.shape()) + t * to_symbolic(x);
  const ChartPoint moved = act(l, c);
  const VarId tid = static_cast<VarId>(ring->size() - 1);
  std::vector<SuperMatrix> out;
  for (const auto& m : moved.matrices) {
    SuperMatrix d(m.shape());
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t col = 0; col < m.cols(); ++col) d(r, col) = m(r, col).left_derivative(tid).rehome(c.ring);
    out.push_back(std::move(d));
  }
  return out;
}

VectorField fundamental_field(const NumericMatrix& x, const Chart& c) {
  const auto linear = first_order_action(x, c);
  VectorField f;
  f.ring = c.ring;
  f.parity = x.parity();
  for (const auto& coord : c.coordinates) {
    const SuperPoly& v = linear[coord.step](coord.row, coord.col);
    if (!v.is_zero()) f.coefficients.emplace(coord.var, v);
  }
  return f;
}

SuperMatrix IsotropicChart::isotropy_residual() const {
  const GramForm g = gram_form(OspFlavor::odd, k1 - 1, l1);
  const SuperMatrix gamma = to_symbolic(g.matrix);
  const SuperMatrix& z = chart.matrices.front();
  return supertranspose(z) * gamma * z;
}

IsotropicChart isotropic_chart(std::size_t k1, std::size_t l1, const std::vector<std::size_t>& tail_k,
                               const std::vector<std::size_t>& tail_l, const std::vector<IndexSet>& tail_index_sets) {
  if (k1 < 1 || l1 < 1) throw std::invalid_argument("isotropic chart needs k1 >= 1 and l1 >= 1");
  if (tail_k.size() != tail_l.size()) throw std::invalid_argument("tail k and l must have the same length");
  const std::size_t m = k1 - 1;
  std::vector<std::size_t> k{2 * k1 - 1, m};
  std::vector<std::size_t> l{2 * l1, l1};
  k.insert(k.end(), tail_k.begin(), tail_k.end());
  l.insert(l.end(), tail_l.begin(), tail_l.end());
  const FlagType ft = validate_flag_type(k, l);

  // First-step variables: independent ones first, then dependent ones.
  std::vector<VariableSpec> specs;
  auto name = [](const char* stem, std::size_t i, std::size_t j) {
    return std::string(stem) + "1_" + std::to_string(i) + (j ? "_" + std::to_string(j) : "");
  };
  enum Slot { x_, xi_, eta_, z_, y_, zeta_ };
  struct Named {
    Slot kind;
    std::size_t i, j;
    VarId id;
  };
  std::vector<Named> independent;
  std::vector<Named> dependent;
  auto declare = [&](std::vector<Named>& into, Slot kind, const char* stem, std::size_t i, std::size_t j, Parity p) {
    specs.push_back({name(stem, i, j), p, 0});
    into.push_back({kind, i, j, static_cast<VarId>(specs.size() - 1)});
  };
  for (std::size_t j = 1; j <= m; ++j) declare(independent, x_, "x", j, 0, Parity::even);
  for (std::size_t i = 1; i <= l1; ++i) declare(independent, xi_, "xi", i, 0, Parity::odd);
  for (std::size_t i = 1; i <= l1; ++i)
    for (std::size_t j = 1; j <= m; ++j) declare(independent, eta_, "eta", i, j, Parity::odd);
  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t j = 1; j < i; ++j) declare(independent, z_, "z", i, j, Parity::even);
  for (std::size_t i = 1; i <= l1; ++i)
    for (std::size_t j = 1; j <= i; ++j) declare(independent, y_, "y", i, j, Parity::even);
  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t j = i; j <= m; ++j) declare(dependent, z_, "z", i, j, Parity::even);
  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t j = 1; j <= l1; ++j) declare(dependent, zeta_, "zeta", i, j, Parity::odd);
  for (std::size_t i = 1; i <= l1; ++i)
    for (std::size_t j = i + 1; j <= l1; ++j) declare(dependent, y_, "y", i, j, Parity::even);

  // Tail steps reuse the generic chart layout with step labels shifted by one.
  const FlagType tail_type{std::vector<std::size_t>(k.begin() + 1, k.end()), std::vector<std::size_t>(l.begin() + 1, l.end())};
  std::vector<IndexSet> tail_sets = tail_index_sets;
  if (tail_sets.empty() && !tail_k.empty()) tail_sets = default_index_sets(tail_type);
  if (!tail_k.empty()) check_index_sets(tail_type, tail_sets);
  const auto tail_slots = tail_k.empty() ? std::vector<StepSlot>{} : declare_step_variables(tail_type, tail_sets, 1, specs);

  IsotropicChart out;
  out.k1 = k1;
  out.l1 = l1;
  const RingPtr ring = RingContext::create(std::move(specs));
  auto var = [&ring](VarId id) { return SuperPoly::variable(ring, id); };

  // Row layout: a1 (Z1 | Zeta1), a2 (E | 0), mid (X1 | Xi1), b1 (Eta1 | Y1), b2 (0 | E).
  const std::size_t a1 = 0, a2 = m, mid = 2 * m, b1 = 2 * m + 1, b2 = 2 * m + 1 + l1;
  auto position = [&](const Named& v) -> std::pair<std::size_t, std::size_t> {
    switch (v.kind) {
      case x_: return {mid, v.i - 1};
      case xi_: return {mid, m + v.i - 1};
      case eta_: return {b1 + v.i - 1, v.j - 1};
      case z_: return {a1 + v.i - 1, v.j - 1};
      case y_: return {b1 + v.i - 1, m + v.j - 1};
      default: return {a1 + v.i - 1, m + v.j - 1};
    }
  };
  SuperMatrix raw(BlockShape{2 * m + 1, 2 * l1, m, l1});
  for (std::size_t i = 0; i < m; ++i) raw(a2 + i, i) = SuperPoly(1);
  for (std::size_t i = 0; i < l1; ++i) raw(b2 + i, m + i) = SuperPoly(1);
  for (const auto* group : {&independent, &dependent}) {
    for (const auto& v : *group) {
      const auto [r, c] = position(v);
      raw(r, c) = var(v.id);
    }
  }

  auto find = [&](const std::vector<Named>& group, Slot kind, std::size_t i, std::size_t j) {
    for (const auto& v : group)
      if (v.kind == kind && v.i == i && v.j == j) return var(v.id);
    throw std::logic_error("isotropic chart: missing coordinate");
  };
  const SuperPoly half = SuperPoly(FieldScalar(Rational(1, 2)));
  for (const auto& v : dependent) {
    SuperPoly expr;
    if (v.kind == z_ && v.i == v.j) {
      const SuperPoly x = find(independent, x_, v.i, 0);
      expr = -(half * x * x);
    } else if (v.kind == z_) {
      expr = -find(independent, z_, v.j, v.i) - find(independent, x_, v.i, 0) * find(independent, x_, v.j, 0);
    } else if (v.kind == zeta_) {
      // Zeta1^T = -Xi1^T X1 - Eta1, entry (j, i) of the transpose.
      expr = -find(independent, xi_, v.j, 0) * find(independent, x_, v.i, 0) - find(independent, eta_, v.j, v.i);
    } else {
      expr = find(independent, y_, v.j, v.i) - find(independent, xi_, v.i, 0) * find(independent, xi_, v.j, 0);
    }
    out.dependent.emplace(v.id, expr);
    const auto [r, c] = position(v);
    out.dependent_positions.push_back({v.id, 0, r, c});
  }

  SuperMatrix first(raw.shape());
  for (std::size_t r = 0; r < raw.rows(); ++r)
    for (std::size_t c = 0; c < raw.cols(); ++c) first(r, c) = raw(r, c).is_zero() ? raw(r, c) : raw(r, c).substitute(out.dependent);

  IndexSet first_set;
  for (std::size_t i = 1; i <= m; ++i) first_set.even.push_back(m + i);
  for (std::size_t i = 1; i <= l1; ++i) first_set.odd.push_back(l1 + i);

  Chart& c = out.chart;
  c.type = ft;
  c.ring = ring;
  c.index_sets.push_back(first_set);
  c.index_sets.insert(c.index_sets.end(), tail_sets.begin(), tail_sets.end());
  c.matrices.push_back(std::move(first));
  if (!tail_k.empty()) {
    auto tail = assemble_steps(tail_type, tail_sets, tail_slots, ring);
    c.matrices.insert(c.matrices.end(), tail.begin(), tail.end());
  }
  for (const auto& v : independent) {
    const auto [r, col] = position(v);
    c.coordinates.push_back({v.id, 0, r, col});
  }
  for (const auto& slot : tail_slots) c.coordinates.push_back({slot.var, slot.step + 1, slot.row, slot.col});
  out.raw_first = std::move(raw);
  return out;
}

bool constant_functions_predicate(const FlagType& ft, ConstantReading reading) {
  if (ft.is_purely_even()) throw std::invalid_argument("purely even flag types are not flag supermanifolds");
  const std::size_t r = ft.r();
  const std::size_t m = ft.m();
  const std::size_t n = ft.n();
  // Number of leading entries that must equal the full dimension for a given s.
  const std::size_t extra = reading == ConstantReading::literal ? 2 : 1;
  auto prefix_full = [](const std::vector<std::size_t>& v, std::size_t count, std::size_t full) {
    for (std::size_t p = 0; p < count; ++p)
      if (v[p] != full) return false;
    return true;
  };
  auto suffix_zero = [](const std::vector<std::size_t>& v, std::size_t from) {
    for (std::size_t p = from; p < v.size(); ++p)
      if (v[p] != 0) return false;
    return true;
  };
  for (std::size_t s = 0; s < r; ++s) {
    const std::size_t count = s + extra;
    if (count > r + 1) continue;
    if (prefix_full(ft.k, count, m) && suffix_zero(ft.l, s + 1)) return false;
    if (prefix_full(ft.l, count, n) && suffix_zero(ft.k, s + 1)) return false;
  }
  return true;
}

}  // namespace superflag
