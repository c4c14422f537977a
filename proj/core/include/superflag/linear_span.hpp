#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "superflag/field_scalar.hpp"
#include "superflag/super_matrix.hpp"

namespace superflag {

using SparseVector = std::map<std::size_t, FieldScalar>;
using DenseVector = std::vector<FieldScalar>;

/// Flattens a matrix row-major, optionally at an offset, into `out`.
void append_entries(const NumericMatrix& m, std::size_t offset, SparseVector& out);
SparseVector flatten(const NumericMatrix& m);

/// Incremental row echelon form over Q(i, sqrt2). Every echelon row remembers
/// how it was built from the accepted inputs, so membership queries return
/// coordinates with respect to those inputs.
class SpanBasis {
 public:
  /// Returns true if `v` was independent of what came before (and was kept).
  bool add(const SparseVector& v);

  std::size_t rank() const { return rows_.size(); }
  bool contains(const SparseVector& v) const { return coordinates(v).has_value(); }

  /// Coefficients c with v = sum_k c_k * (k-th accepted vector), or nullopt.
  std::optional<DenseVector> coordinates(const SparseVector& v) const;

 private:
  struct Row {
    SparseVector entries;  // leading entry is 1
    DenseVector combination;
  };

  /// Reduces v against the echelon rows; returns the residual and fills the
  /// accumulated combination (sized to rank()).
  SparseVector reduce(const SparseVector& v, DenseVector& combination) const;

  std::map<std::size_t, Row> rows_;  // keyed by pivot index
};

/// Basis of {c : sum_p c_p v_p = 0}.
std::vector<DenseVector> nullspace(const std::vector<SparseVector>& vectors);

}  // namespace superflag
