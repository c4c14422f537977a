#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "superflag/field_scalar.hpp"
#include "superflag/super_poly.hpp"

namespace superflag {

/// Row/column parity split of a supermatrix. Even indices come first.
struct BlockShape {
  std::size_t even_rows = 0;
  std::size_t odd_rows = 0;
  std::size_t even_cols = 0;
  std::size_t odd_cols = 0;

  static constexpr BlockShape square(std::size_t even, std::size_t odd) { return {even, odd, even, odd}; }

  constexpr std::size_t rows() const { return even_rows + odd_rows; }
  constexpr std::size_t cols() const { return even_cols + odd_cols; }
  constexpr bool is_square() const { return even_rows == even_cols && odd_rows == odd_cols; }
  constexpr Parity row_parity(std::size_t r) const { return r < even_rows ? Parity::even : Parity::odd; }
  constexpr Parity col_parity(std::size_t c) const { return c < even_cols ? Parity::even : Parity::odd; }
  constexpr BlockShape transposed() const { return {even_cols, odd_cols, even_rows, odd_rows}; }
  bool operator==(const BlockShape&) const = default;

  std::string to_string() const;
};

inline bool is_zero(const FieldScalar& x) { return x.is_zero(); }
inline bool is_zero(const SuperPoly& x) { return x.is_zero(); }
inline Homogeneity entry_homogeneity(const FieldScalar& x) {
  return x.is_zero() ? Homogeneity::zero : Homogeneity::even;
}
inline Homogeneity entry_homogeneity(const SuperPoly& x) { return x.homogeneity(); }

/// Dense block-graded matrix. The grading of a homogeneous matrix is read off
/// its entries: entry (i, j) of a matrix of parity p has parity
/// p + |i| + |j|. Numeric entries count as even, so a numeric matrix is even
/// when block-diagonal and odd when block-off-diagonal.
template <class T>
class BasicSuperMatrix {
 public:
  BasicSuperMatrix() = default;
  explicit BasicSuperMatrix(BlockShape shape) : shape_(shape), entries_(shape.rows() * shape.cols()) {}

  static BasicSuperMatrix identity(BlockShape shape) {
    if (!shape.is_square()) throw std::invalid_argument("identity requires a square block shape");
    BasicSuperMatrix m(shape);
    for (std::size_t k = 0; k < shape.rows(); ++k) m(k, k) = T(1);
    return m;
  }

  const BlockShape& shape() const { return shape_; }
  std::size_t rows() const { return shape_.rows(); }
  std::size_t cols() const { return shape_.cols(); }

  T& operator()(std::size_t r, std::size_t c) { return entries_[r * shape_.cols() + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return entries_[r * shape_.cols() + c]; }
  const std::vector<T>& entries() const { return entries_; }

  bool is_zero() const {
    for (const auto& e : entries_)
      if (!superflag::is_zero(e)) return false;
    return true;
  }

  Homogeneity homogeneity() const {
    Homogeneity h = Homogeneity::zero;
    for (std::size_t r = 0; r < rows(); ++r) {
      for (std::size_t c = 0; c < cols(); ++c) {
        const Homogeneity eh = entry_homogeneity((*this)(r, c));
        if (eh == Homogeneity::zero) continue;
        if (eh == Homogeneity::mixed) return Homogeneity::mixed;
        const Parity p = (eh == Homogeneity::odd ? Parity::odd : Parity::even) + shape_.row_parity(r) +
                         shape_.col_parity(c);
        const Homogeneity ph = homogeneity_of(p);
        if (h == Homogeneity::zero) {
          h = ph;
        } else if (h != ph) {
          return Homogeneity::mixed;
        }
      }
    }
    return h;
  }

  /// Parity of a homogeneous matrix (zero counts as even).
  Parity parity() const {
    switch (homogeneity()) {
      case Homogeneity::mixed: throw std::invalid_argument("matrix is not homogeneous");
      case Homogeneity::odd: return Parity::odd;
      default: return Parity::even;
    }
  }

  /// Rows picked by index, keeping all columns; `even_count` of the picked rows
  /// form the even row block.
  BasicSuperMatrix select_rows(const std::vector<std::size_t>& picked, std::size_t even_count) const {
    BasicSuperMatrix out(BlockShape{even_count, picked.size() - even_count, shape_.even_cols, shape_.odd_cols});
    for (std::size_t r = 0; r < picked.size(); ++r)
      for (std::size_t c = 0; c < cols(); ++c) out(r, c) = (*this)(picked[r], c);
    return out;
  }

  bool operator==(const BasicSuperMatrix& other) const {
    return shape_ == other.shape_ && entries_ == other.entries_;
  }

 private:
  BlockShape shape_;
  std::vector<T> entries_;
};

using NumericMatrix = BasicSuperMatrix<FieldScalar>;
using SuperMatrix = BasicSuperMatrix<SuperPoly>;

template <class T>
BasicSuperMatrix<T> operator+(BasicSuperMatrix<T> a, const BasicSuperMatrix<T>& b) {
  if (!(a.shape() == b.shape())) throw std::invalid_argument("shape mismatch in matrix sum");
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      if (!is_zero(b(r, c))) a(r, c) += b(r, c);
  return a;
}

template <class T>
BasicSuperMatrix<T> operator-(BasicSuperMatrix<T> a, const BasicSuperMatrix<T>& b) {
  if (!(a.shape() == b.shape())) throw std::invalid_argument("shape mismatch in matrix difference");
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      if (!is_zero(b(r, c))) a(r, c) -= b(r, c);
  return a;
}

template <class T>
BasicSuperMatrix<T> operator-(BasicSuperMatrix<T> a) {
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      if (!is_zero(a(r, c))) a(r, c) = -a(r, c);
  return a;
}

/// Scalar multiple; the scalar multiplies from the left.
template <class T>
BasicSuperMatrix<T> operator*(const T& s, BasicSuperMatrix<T> a) {
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      if (!is_zero(a(r, c))) a(r, c) = s * a(r, c);
  return a;
}

template <class T>
BasicSuperMatrix<T> operator*(const BasicSuperMatrix<T>& a, const BasicSuperMatrix<T>& b) {
  if (a.shape().even_cols != b.shape().even_rows || a.shape().odd_cols != b.shape().odd_rows)
    throw std::invalid_argument("shape mismatch in matrix product: " + a.shape().to_string() + " * " +
                                b.shape().to_string());
  BasicSuperMatrix<T> out(
      BlockShape{a.shape().even_rows, a.shape().odd_rows, b.shape().even_cols, b.shape().odd_cols});
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const T& aik = a(i, k);
      if (is_zero(aik)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const T& bkj = b(k, j);
        if (is_zero(bkj)) continue;
        out(i, j) += aik * bkj;
      }
    }
  }
  return out;
}

/// Plain transpose with the parity split carried along.
template <class T>
BasicSuperMatrix<T> transpose(const BasicSuperMatrix<T>& m) {
  BasicSuperMatrix<T> out(m.shape().transposed());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(c, r) = m(r, c);
  return out;
}

/// Blockwise supertranspose (M11^T, M21^T; -M12^T, M22^T). Applies to
/// rectangular matrices as well; homogeneous input only.
template <class T>
BasicSuperMatrix<T> supertranspose(const BasicSuperMatrix<T>& m) {
  if (m.homogeneity() == Homogeneity::mixed) throw std::invalid_argument("supertranspose of an inhomogeneous matrix");
  BasicSuperMatrix<T> out(m.shape().transposed());
  const BlockShape& s = out.shape();
  for (std::size_t r = 0; r < out.rows(); ++r) {
    for (std::size_t c = 0; c < out.cols(); ++c) {
      const T& v = m(c, r);
      if (is_zero(v)) continue;
      const bool flip = s.row_parity(r) == Parity::odd && s.col_parity(c) == Parity::even;
      out(r, c) = flip ? -v : v;
    }
  }
  return out;
}

/// [A, B] = AB - (-1)^{|A||B|} BA for homogeneous square A, B of equal shape.
template <class T>
BasicSuperMatrix<T> superbracket(const BasicSuperMatrix<T>& a, const BasicSuperMatrix<T>& b) {
  if (!(a.shape() == b.shape()) || !a.shape().is_square())
    throw std::invalid_argument("superbracket needs square matrices of equal shape");
  const Parity pa = a.parity();
  const Parity pb = b.parity();
  if (is_odd(pa) && is_odd(pb)) return a * b + b * a;
  return a * b - b * a;
}

/// Exact Gauss-Jordan inverse; throws std::domain_error when singular.
NumericMatrix invert(const NumericMatrix& m);

/// Inverse of a matrix whose body (the part free of nilpotent variables) is
/// numeric: M = B(I + K) with K nilpotent, so the Neumann series terminates.
/// Throws std::domain_error if the body is singular or not numeric.
SuperMatrix invert(const SuperMatrix& m);

SuperMatrix to_symbolic(const NumericMatrix& m);
/// Throws std::invalid_argument if some entry is not constant.
NumericMatrix to_numeric(const SuperMatrix& m);

std::string to_string(const NumericMatrix& m);
std::string to_string(const SuperMatrix& m);

/// Matrix literal: rows separated by ';', entries by ','; optional brackets.
NumericMatrix parse_numeric_matrix(std::string_view text, BlockShape shape);
SuperMatrix parse_super_matrix(std::string_view text, BlockShape shape, const RingPtr& ring);

/// Parses "p|q" (square) or "p|q x r|s".
BlockShape parse_block_shape(std::string_view text);

}  // namespace superflag
