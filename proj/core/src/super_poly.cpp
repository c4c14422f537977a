#include "superflag/super_poly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "superflag/detail/expr_parser.hpp"

namespace superflag {

const char* to_string(Parity p) { return p == Parity::odd ? "odd" : "even"; }

Homogeneity homogeneity_of(Parity p) { return p == Parity::odd ? Homogeneity::odd : Homogeneity::even; }

// ---------------------------------------------------------------------------
// RingContext

RingContext::RingContext(std::vector<VariableSpec> vars) : vars_(std::move(vars)) {
  for (VarId k = 0; k < vars_.size(); ++k) {
    const auto& v = vars_[k];
    if (v.name.empty() || v.name == "i" || v.name == "r2")
      throw std::invalid_argument("invalid variable name '" + v.name + "'");
    if (v.parity == Parity::odd && v.nilpotency != 0)
      throw std::invalid_argument("odd variable '" + v.name + "' cannot carry a truncation order");
    if (!by_name_.emplace(v.name, k).second) throw std::invalid_argument("duplicate variable '" + v.name + "'");
  }
}

RingPtr RingContext::create(std::vector<VariableSpec> vars) {
  return std::shared_ptr<const RingContext>(new RingContext(std::move(vars)));
}

RingPtr RingContext::extended(const std::vector<VariableSpec>& extra) const {
  std::vector<VariableSpec> all = vars_;
  all.insert(all.end(), extra.begin(), extra.end());
  return create(std::move(all));
}

std::optional<VarId> RingContext::find(std::string_view name) const {
  auto it = by_name_.find(name);
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

VarId RingContext::id(std::string_view name) const {
  auto found = find(name);
  if (!found) throw std::out_of_range("unknown variable '" + std::string(name) + "'");
  return *found;
}

bool RingContext::is_nilpotent(VarId id) const {
  const auto& v = vars_.at(id);
  return v.parity == Parity::odd || v.nilpotency != 0;
}

bool RingContext::is_prefix_of(const RingContext& other) const {
  if (this == &other) return true;
  if (other.vars_.size() < vars_.size()) return false;
  for (std::size_t k = 0; k < vars_.size(); ++k) {
    const auto& a = vars_[k];
    const auto& b = other.vars_[k];
    if (a.name != b.name || a.parity != b.parity || a.nilpotency != b.nilpotency) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Monomials

unsigned Monomial::degree() const {
  unsigned d = static_cast<unsigned>(odd.size());
  for (const auto& [v, e] : even) d += e;
  return d;
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
  const unsigned da = a.degree();
  const unsigned db = b.degree();
  if (da != db) return da < db;
  if (a.odd != b.odd) return a.odd < b.odd;
  return a.even < b.even;
}

namespace {

/// Product of two monomials with its reordering sign; nullopt when it vanishes.
std::optional<std::pair<Monomial, bool>> multiply_monomials(const Monomial& a, const Monomial& b,
                                                            const RingContext* ring) {
  Monomial out;
  out.even.reserve(a.even.size() + b.even.size());
  auto ia = a.even.begin();
  auto ib = b.even.begin();
  while (ia != a.even.end() || ib != b.even.end()) {
    if (ib == b.even.end() || (ia != a.even.end() && ia->first < ib->first)) {
      out.even.push_back(*ia++);
    } else if (ia == a.even.end() || ib->first < ia->first) {
      out.even.push_back(*ib++);
    } else {
      const unsigned e = ia->second + ib->second;
      const unsigned cap = ring ? ring->spec(ia->first).nilpotency : 0;
      if (cap != 0 && e >= cap) return std::nullopt;
      out.even.emplace_back(ia->first, e);
      ++ia;
      ++ib;
    }
  }
  // Moving each odd factor of b leftwards past the larger factors of a.
  bool negative = false;
  out.odd.reserve(a.odd.size() + b.odd.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.odd.size() || j < b.odd.size()) {
    if (j == b.odd.size() || (i < a.odd.size() && a.odd[i] < b.odd[j])) {
      out.odd.push_back(a.odd[i++]);
    } else if (i == a.odd.size() || b.odd[j] < a.odd[i]) {
      if ((a.odd.size() - i) % 2) negative = !negative;
      out.odd.push_back(b.odd[j++]);
    } else {
      return std::nullopt;
    }
  }
  return std::make_pair(std::move(out), negative);
}

}  // namespace

// ---------------------------------------------------------------------------
// SuperPoly

SuperPoly::SuperPoly(FieldScalar c) {
  if (!c.is_zero()) terms_.emplace(Monomial{}, std::move(c));
}

SuperPoly SuperPoly::variable(const RingPtr& ring, VarId id) {
  if (!ring || id >= ring->size()) throw std::out_of_range("variable index outside ring context");
  Monomial m;
  if (ring->spec(id).parity == Parity::odd) {
    m.odd.push_back(id);
  } else {
    if (ring->spec(id).nilpotency == 1) return SuperPoly();
    m.even.emplace_back(id, 1u);
  }
  Terms t;
  t.emplace(std::move(m), FieldScalar(1));
  return SuperPoly(ring, std::move(t));
}

SuperPoly SuperPoly::variable(const RingPtr& ring, std::string_view name) {
  if (!ring) throw std::invalid_argument("variable lookup without a ring context");
  return variable(ring, ring->id(name));
}

bool SuperPoly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one()); }

FieldScalar SuperPoly::constant_term() const {
  auto it = terms_.find(Monomial{});
  return it == terms_.end() ? FieldScalar() : it->second;
}

Homogeneity SuperPoly::homogeneity() const {
  Homogeneity h = Homogeneity::zero;
  for (const auto& [m, c] : terms_) {
    const Homogeneity t = homogeneity_of(m.parity());
    if (h == Homogeneity::zero) {
      h = t;
    } else if (h != t) {
      return Homogeneity::mixed;
    }
  }
  return h;
}

bool SuperPoly::is_nilpotent() const {
  for (const auto& [m, c] : terms_) {
    if (!m.odd.empty()) continue;
    bool truncated = false;
    for (const auto& [v, e] : m.even)
      if (ring_->spec(v).nilpotency != 0) truncated = true;
    if (!truncated) return false;
  }
  return true;
}

SuperPoly SuperPoly::body() const {
  Terms out;
  for (const auto& [m, c] : terms_) {
    if (!m.odd.empty()) continue;
    bool truncated = false;
    for (const auto& [v, e] : m.even)
      if (ring_->spec(v).nilpotency != 0) truncated = true;
    if (!truncated) out.emplace(m, c);
  }
  return SuperPoly(ring_, std::move(out));
}

bool SuperPoly::depends_on(VarId id) const {
  for (const auto& [m, c] : terms_) {
    if (std::binary_search(m.odd.begin(), m.odd.end(), id)) return true;
    for (const auto& [v, e] : m.even)
      if (v == id) return true;
  }
  return false;
}

const RingPtr& SuperPoly::common_ring(const SuperPoly& a, const SuperPoly& b) {
  if (!a.ring_) return b.ring_;
  if (!b.ring_ || a.ring_ == b.ring_) return a.ring_;
  if (a.ring_->is_prefix_of(*b.ring_)) return b.ring_;
  if (b.ring_->is_prefix_of(*a.ring_)) return a.ring_;
  throw std::invalid_argument("polynomials belong to different ring contexts");
}

void SuperPoly::add_term(const Monomial& m, const FieldScalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

SuperPoly SuperPoly::operator-() const {
  SuperPoly out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

SuperPoly& SuperPoly::operator+=(const SuperPoly& other) {
  ring_ = common_ring(*this, other);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

SuperPoly& SuperPoly::operator-=(const SuperPoly& other) {
  ring_ = common_ring(*this, other);
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

SuperPoly operator*(const SuperPoly& a, const SuperPoly& b) {
  SuperPoly out;
  out.ring_ = SuperPoly::common_ring(a, b);
  if (a.is_zero() || b.is_zero()) return out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      auto prod = multiply_monomials(ma, mb, out.ring_.get());
      if (!prod) continue;
      FieldScalar c = ca * cb;
      if (prod->second) c = -c;
      out.add_term(prod->first, c);
    }
  }
  return out;
}

SuperPoly SuperPoly::scaled(const FieldScalar& c) const {
  if (c.is_zero()) return SuperPoly(ring_, {});
  SuperPoly out = *this;
  for (auto& [m, coef] : out.terms_) coef = c * coef;
  return out;
}

SuperPoly SuperPoly::left_derivative(VarId v) const {
  SuperPoly out(ring_, {});
  if (!ring_ || v >= ring_->size()) return out;
  const bool odd = ring_->spec(v).parity == Parity::odd;
  for (const auto& [m, c] : terms_) {
    if (odd) {
      auto it = std::lower_bound(m.odd.begin(), m.odd.end(), v);
      if (it == m.odd.end() || *it != v) continue;
      const auto position = static_cast<std::size_t>(it - m.odd.begin());
      Monomial rest = m;
      rest.odd.erase(rest.odd.begin() + static_cast<std::ptrdiff_t>(position));
      out.add_term(rest, position % 2 ? -c : c);
    } else {
      auto it = std::find_if(m.even.begin(), m.even.end(), [v](const auto& p) { return p.first == v; });
      if (it == m.even.end()) continue;
      Monomial rest = m;
      auto& slot = rest.even[static_cast<std::size_t>(it - m.even.begin())];
      const unsigned e = slot.second;
      if (--slot.second == 0) rest.even.erase(rest.even.begin() + (it - m.even.begin()));
      out.add_term(rest, c * FieldScalar(static_cast<long>(e)));
    }
  }
  return out;
}

SuperPoly SuperPoly::substitute(const std::map<VarId, SuperPoly>& bindings) const {
  if (!ring_) return *this;
  RingPtr ring = ring_;
  for (const auto& [v, image] : bindings) {
    if (!ring_ || v >= ring_->size()) throw std::out_of_range("substitution for a variable outside the ring");
    const Homogeneity h = image.homogeneity();
    const Homogeneity want = homogeneity_of(ring_->spec(v).parity);
    if (h != Homogeneity::zero && h != want)
      throw std::invalid_argument("substitution for '" + ring_->spec(v).name + "' does not preserve parity");
    SuperPoly probe(ring, {});
    ring = common_ring(probe, image);
  }
  auto image_of = [&](VarId v) {
    auto it = bindings.find(v);
    return it != bindings.end() ? it->second : variable(ring_, v);
  };
  SuperPoly out(ring, {});
  for (const auto& [m, c] : terms_) {
    SuperPoly term(c);
    for (const auto& [v, e] : m.even) {
      const SuperPoly img = image_of(v);
      for (unsigned k = 0; k < e; ++k) term = term * img;
    }
    for (VarId v : m.odd) term = term * image_of(v);
    out += term;
  }
  out.ring_ = ring;
  return out;
}

SuperPoly SuperPoly::rehome(const RingPtr& target) const {
  if (!ring_ || ring_ == target || ring_->is_prefix_of(*target)) return SuperPoly(target, terms_);
  if (!target || !target->is_prefix_of(*ring_))
    throw std::invalid_argument("target ring is not compatible with the polynomial's ring");
  for (const auto& [m, c] : terms_) {
    const bool outside = std::any_of(m.odd.begin(), m.odd.end(), [&](VarId v) { return v >= target->size(); }) ||
                         std::any_of(m.even.begin(), m.even.end(), [&](const auto& p) { return p.first >= target->size(); });
    if (outside) throw std::invalid_argument("polynomial uses variables outside the target ring");
  }
  return SuperPoly(target, terms_);
}

namespace {

std::string monomial_string(const Monomial& m, const RingContext& ring) {
  std::string s;
  auto append = [&s](const std::string& f) {
    if (!s.empty()) s += '*';
    s += f;
  };
  for (const auto& [v, e] : m.even) append(e == 1 ? ring.spec(v).name : ring.spec(v).name + "^" + std::to_string(e));
  for (VarId v : m.odd) append(ring.spec(v).name);
  return s;
}

/// Splits a coefficient into (negative?, magnitude text). Multi-component
/// coefficients are parenthesised and treated as positive.
std::pair<bool, std::string> coefficient_text(const FieldScalar& c) {
  int nonzero = 0;
  const Rational* only = nullptr;
  int slot = 0;
  const Rational* parts[4] = {&c.rational_part(), &c.i_part(), &c.r2_part(), &c.i_r2_part()};
  for (int k = 0; k < 4; ++k) {
    if (sgn(*parts[k]) != 0) {
      ++nonzero;
      only = parts[k];
      slot = k;
    }
  }
  if (nonzero == 1) {
    Rational mag = abs(*only);
    FieldScalar m;
    switch (slot) {
      case 0: m = FieldScalar(mag); break;
      case 1: m = FieldScalar(0, mag, 0, 0); break;
      case 2: m = FieldScalar(0, 0, mag, 0); break;
      default: m = FieldScalar(0, 0, 0, mag); break;
    }
    return {sgn(*only) < 0, m.to_string()};
  }
  return {false, "(" + c.to_string() + ")"};
}

}  // namespace

std::string SuperPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    auto [negative, coef] = coefficient_text(c);
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (m.is_one()) {
      os << coef;
    } else if (coef == "1") {
      os << monomial_string(m, *ring_);
    } else {
      os << coef << '*' << monomial_string(m, *ring_);
    }
  }
  return os.str();
}

SuperPoly SuperPoly::parse(std::string_view text, const RingPtr& ring) {
  detail::ExprParser<SuperPoly>::Hooks hooks{
      [](const Rational& q) { return SuperPoly(FieldScalar(q)); },
      [&ring](const std::string& name) -> SuperPoly {
        if (name == "i") return SuperPoly(FieldScalar::i());
        if (name == "r2") return SuperPoly(FieldScalar::sqrt2());
        if (!ring || !ring->find(name)) throw std::invalid_argument("unknown variable '" + name + "'");
        return variable(ring, name);
      },
      [](const SuperPoly& a, const SuperPoly& b) -> SuperPoly {
        if (!b.is_constant() || b.is_zero()) throw std::invalid_argument("division by a non-constant or zero");
        return a.scaled(b.constant_term().inverse());
      }};
  SuperPoly p = detail::ExprParser<SuperPoly>(text, std::move(hooks)).parse();
  if (ring && !p.ring_) p.ring_ = ring;
  return p;
}

std::ostream& operator<<(std::ostream& os, const SuperPoly& p) { return os << p.to_string(); }

SuperPoly multiply(const SuperPoly& p, const SuperPoly& q) { return p * q; }
SuperPoly left_derivative(const SuperPoly& p, VarId v) { return p.left_derivative(v); }
SuperPoly substitute(const SuperPoly& p, const std::map<VarId, SuperPoly>& bindings) {
  return p.substitute(bindings);
}

}  // namespace superflag
