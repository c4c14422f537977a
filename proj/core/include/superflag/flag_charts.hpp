#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "superflag/super_matrix.hpp"
#include "superflag/super_poly.hpp"

namespace superflag {

/// Flag type (k_0..k_r | l_0..l_r) with k_0 = m, l_0 = n.
struct FlagType {
  std::vector<std::size_t> k;
  std::vector<std::size_t> l;

  std::size_t r() const { return k.size() - 1; }
  std::size_t m() const { return k.front(); }
  std::size_t n() const { return l.front(); }
  bool is_purely_even() const;
  /// Number of even and odd chart coordinates.
  std::pair<std::size_t, std::size_t> dimension() const;
  std::string to_string() const;
  bool operator==(const FlagType&) const = default;
};

/// Checks k_r <= ... <= k_0, l_r <= ... <= l_0 and
/// 0 < k_r + l_r < ... < k_0 + l_0. Throws std::invalid_argument.
FlagType validate_flag_type(std::vector<std::size_t> k, std::vector<std::size_t> l);

/// Parses "k=3,1 l=2,1".
FlagType parse_flag_type(std::string_view text);

/// Identity-row positions of one chart step, 1-based.
struct IndexSet {
  std::vector<std::size_t> even;
  std::vector<std::size_t> odd;

  std::string to_string() const;
  bool operator==(const IndexSet&) const = default;
};

/// Parses "2;2" or "1,3;" (even part, then odd part).
IndexSet parse_index_set(std::string_view text);

/// The first size() index sets {1..k_s} / {1..l_s}.
std::vector<IndexSet> default_index_sets(const FlagType& ft);

/// Coordinate matrices Z_{I_1}, ..., Z_{I_r}; entries may be arbitrary
/// polynomials (images of a chart under the action).
struct ChartPoint {
  FlagType type;
  std::vector<IndexSet> index_sets;
  std::vector<SuperMatrix> matrices;

  bool operator==(const ChartPoint&) const = default;
  std::string to_string() const;
};

struct ChartCoordinate {
  VarId var = 0;
  std::size_t step = 0;  // 0-based matrix index
  std::size_t row = 0;
  std::size_t col = 0;
};

/// A chart with a coordinate variable in every slot that is not fixed by the
/// identity rows.
struct Chart : ChartPoint {
  RingPtr ring;
  std::vector<ChartCoordinate> coordinates;

  std::optional<ChartCoordinate> coordinate(std::string_view name) const;
};

/// Coordinate names: x{s}_{i}_{j}, xi{s}_{i}_{j}, eta{s}_{i}_{j},
/// y{s}_{i}_{j} for block row i and column j of step s. Variables of `base`
/// (e.g. group parameters) come first in the chart's ring.
Chart build_chart(const FlagType& ft, const std::vector<IndexSet>& index_sets, const RingPtr& base = nullptr);

/// (L, Z) -> (L Z_1 C_1^{-1}, C_1 Z_2 C_2^{-1}, ...), C_s the rows named by
/// the target index sets (default: the source's). The designated rows must
/// have a numeric invertible body, which holds for L = E + nilpotent and for
/// any L whose body maps the identity rows into themselves.
ChartPoint act(const SuperMatrix& l, const ChartPoint& c, const std::vector<IndexSet>& targets = {});

/// Derivation sum_z coefficient_z * d/dz, with left derivatives.
struct VectorField {
  RingPtr ring;
  Parity parity = Parity::even;
  std::map<VarId, SuperPoly> coefficients;  // zero coefficients are omitted

  SuperPoly apply(const SuperPoly& f) const;
  std::string to_string() const;
  bool operator==(const VectorField& other) const { return coefficients == other.coefficients; }
};

/// [V, W] = V W - (-1)^{|V||W|} W V.
VectorField bracket(const VectorField& v, const VectorField& w);

/// t-linear part of act(E + tX, c), one matrix per chart step; t has the
/// parity of X and t^2 = 0, coefficients are read as d/dt from the left.
std::vector<SuperMatrix> first_order_action(const NumericMatrix& x, const Chart& c);

/// The fundamental field of X on the chart's coordinates.
VectorField fundamental_field(const NumericMatrix& x, const Chart& c);

/// nu([X, Y]) = kFundamentalFieldSign * (-1)^{|X||Y|} [nu(X), nu(Y)], that is
/// nu([X, Y]) = [nu(Y), nu(X)]: the chart action is a left action, so nu is a
/// super anti-homomorphism.
inline constexpr int kFundamentalFieldSign = -1;

/// Maximal-type isotropic chart of IF_{k|l}, k = (2k1-1, k1-1, tail k),
/// l = (2l1, l1, tail l). The first matrix has rows (Z1, E, X1, Eta1, 0) and
/// columns (Z1-block | Zeta1-block); dependent coordinates are solved from
/// the isotropy relations.
struct IsotropicChart {
  std::size_t k1 = 0;
  std::size_t l1 = 0;
  Chart chart;               // independent coordinates only, dependents substituted
  SuperMatrix raw_first;     // first matrix with every slot a free variable
  std::map<VarId, SuperPoly> dependent;
  std::vector<ChartCoordinate> dependent_positions;

  /// Z^{ST} Gamma Z for the substituted first matrix.
  SuperMatrix isotropy_residual() const;
};

/// `tail` lists the steps after the first: k_2.., l_2.. (may be empty).
IsotropicChart isotropic_chart(std::size_t k1, std::size_t l1, const std::vector<std::size_t>& tail_k = {},
                               const std::vector<std::size_t>& tail_l = {},
                               const std::vector<IndexSet>& tail_index_sets = {});

/// Which index convention to use for the excluded flag types.
enum class ConstantReading {
  /// k_0 = ... = k_{s+1} = m and l_{s+1} = ... = l_r = 0, or mirrored.
  literal,
  /// k_0 = ... = k_s = m and l_{s+1} = ... = l_r = 0, or mirrored.
  natural,
};

/// True iff global functions are constants; false means they form the
/// Grassmann algebra on mn generators. Purely even flags are rejected.
bool constant_functions_predicate(const FlagType& ft, ConstantReading reading = ConstantReading::literal);

}  // namespace superflag
