#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "superflag/field_scalar.hpp"

namespace superflag {

enum class Parity : std::uint8_t { even = 0, odd = 1 };

constexpr Parity operator+(Parity a, Parity b) {
  return static_cast<Parity>(static_cast<std::uint8_t>(a) ^ static_cast<std::uint8_t>(b));
}
constexpr bool is_odd(Parity p) { return p == Parity::odd; }
const char* to_string(Parity p);

/// Grading of a polynomial: `zero` is compatible with either parity.
enum class Homogeneity : std::uint8_t { zero, even, odd, mixed };

Homogeneity homogeneity_of(Parity p);

struct VariableSpec {
  std::string name;
  Parity parity = Parity::even;
  /// For even variables: the power at which the variable vanishes (t^2 = 0 for
  /// a first-order parameter). Zero means a free polynomial variable.
  unsigned nilpotency = 0;
};

using VarId = std::uint32_t;

/// Immutable list of variables shared by all polynomials of one chart or
/// computation. Odd variables anticommute in index order; that order is the
/// canonical order of odd factors in every monomial.
class RingContext : public std::enable_shared_from_this<RingContext> {
 public:
  static std::shared_ptr<const RingContext> create(std::vector<VariableSpec> vars);

  /// New context whose first size() variables coincide with this one.
  std::shared_ptr<const RingContext> extended(const std::vector<VariableSpec>& extra) const;

  std::size_t size() const { return vars_.size(); }
  const VariableSpec& spec(VarId id) const { return vars_.at(id); }
  const std::vector<VariableSpec>& variables() const { return vars_; }
  std::optional<VarId> find(std::string_view name) const;
  VarId id(std::string_view name) const;  // throws std::out_of_range
  bool is_nilpotent(VarId id) const;

  /// True when `other` is this context or an extension of it.
  bool is_prefix_of(const RingContext& other) const;

 private:
  explicit RingContext(std::vector<VariableSpec> vars);
  std::vector<VariableSpec> vars_;
  std::map<std::string, VarId, std::less<>> by_name_;
};

using RingPtr = std::shared_ptr<const RingContext>;

struct Monomial {
  std::vector<std::pair<VarId, unsigned>> even;  // sorted by variable, exponents > 0
  std::vector<VarId> odd;                        // strictly increasing

  unsigned degree() const;
  Parity parity() const { return odd.size() % 2 ? Parity::odd : Parity::even; }
  bool is_one() const { return even.empty() && odd.empty(); }
  bool operator==(const Monomial&) const = default;
};

/// Graded lexicographic order; used for canonical storage and rendering.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Element of the free supercommutative ring over Q(i, sqrt2) generated by a
/// RingContext. A polynomial without a context is a constant and combines with
/// any context.
class SuperPoly {
 public:
  using Terms = std::map<Monomial, FieldScalar, MonomialOrder>;

  SuperPoly() = default;
  SuperPoly(FieldScalar c);  // NOLINT
  SuperPoly(long c) : SuperPoly(FieldScalar(c)) {}  // NOLINT

  static SuperPoly variable(const RingPtr& ring, VarId id);
  static SuperPoly variable(const RingPtr& ring, std::string_view name);

  const RingPtr& ring() const { return ring_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  FieldScalar constant_term() const;
  Homogeneity homogeneity() const;

  /// Every monomial contains an odd variable or a truncated even one.
  bool is_nilpotent() const;
  /// Part of the polynomial free of nilpotent variables.
  SuperPoly body() const;
  bool depends_on(VarId id) const;

  SuperPoly operator-() const;
  SuperPoly& operator+=(const SuperPoly& other);
  SuperPoly& operator-=(const SuperPoly& other);
  friend SuperPoly operator+(SuperPoly a, const SuperPoly& b) { return a += b; }
  friend SuperPoly operator-(SuperPoly a, const SuperPoly& b) { return a -= b; }
  friend SuperPoly operator*(const SuperPoly& a, const SuperPoly& b);
  SuperPoly& operator*=(const SuperPoly& other) { return *this = *this * other; }
  SuperPoly scaled(const FieldScalar& c) const;
  bool operator==(const SuperPoly& other) const { return terms_ == other.terms_; }

  /// Left partial derivative: an odd variable is commuted to the front
  /// before it is removed.
  SuperPoly left_derivative(VarId v) const;

  /// Simultaneous substitution. Bindings must preserve parity.
  SuperPoly substitute(const std::map<VarId, SuperPoly>& bindings) const;

  /// Re-expresses this polynomial in `target`, which must extend its context
  /// or be a prefix of it that covers every variable in use.
  SuperPoly rehome(const RingPtr& target) const;

  std::string to_string() const;

  /// Reads the rendering produced by to_string(). Identifiers resolve against
  /// `ring`; `i` and `r2` are the field constants.
  static SuperPoly parse(std::string_view text, const RingPtr& ring);

 private:
  SuperPoly(RingPtr ring, Terms terms) : ring_(std::move(ring)), terms_(std::move(terms)) {}
  static const RingPtr& common_ring(const SuperPoly& a, const SuperPoly& b);
  void add_term(const Monomial& m, const FieldScalar& c);

  RingPtr ring_;
  Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const SuperPoly& p);

SuperPoly multiply(const SuperPoly& p, const SuperPoly& q);
SuperPoly left_derivative(const SuperPoly& p, VarId v);
SuperPoly substitute(const SuperPoly& p, const std::map<VarId, SuperPoly>& bindings);

}  // namespace superflag
