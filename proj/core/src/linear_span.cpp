#include "superflag/linear_span.hpp"

namespace superflag {

namespace {

void axpy(SparseVector& y, const FieldScalar& a, const SparseVector& x) {
  for (const auto& [k, v] : x) {
    auto [it, inserted] = y.try_emplace(k, a * v);
    if (!inserted) {
      it->second += a * v;
      if (it->second.is_zero()) y.erase(it);
    }
  }
}

void axpy(DenseVector& y, const FieldScalar& a, const DenseVector& x) {
  if (y.size() < x.size()) y.resize(x.size());
  for (std::size_t k = 0; k < x.size(); ++k)
    if (!x[k].is_zero()) y[k] += a * x[k];
}

}  // namespace

void append_entries(const NumericMatrix& m, std::size_t offset, SparseVector& out) {
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!m(r, c).is_zero()) out[offset + r * m.cols() + c] = m(r, c);
}

SparseVector flatten(const NumericMatrix& m) {
  SparseVector v;
  append_entries(m, 0, v);
  return v;
}

SparseVector SpanBasis::reduce(const SparseVector& v, DenseVector& combination) const {
  SparseVector residual = v;
  combination.assign(rows_.size(), FieldScalar());
  // Echelon rows only touch indices at or after their pivot, so one ascending
  // sweep clears every pivot position.
  auto it = residual.begin();
  while (it != residual.end()) {
    auto row = rows_.find(it->first);
    if (row == rows_.end()) {
      ++it;
      continue;
    }
    const std::size_t key = it->first;
    const FieldScalar coef = it->second;
    axpy(residual, -coef, row->second.entries);
    axpy(combination, coef, row->second.combination);
    it = residual.upper_bound(key);
  }
  return residual;
}

bool SpanBasis::add(const SparseVector& v) {
  DenseVector combination;
  SparseVector residual = reduce(v, combination);
  if (residual.empty()) return false;
  const std::size_t index = rows_.size();
  const FieldScalar scale = residual.begin()->second.inverse();
  for (auto& [k, x] : residual) x *= scale;
  // residual = v_new - sum combination_k * v_k
  DenseVector built(index + 1);
  for (std::size_t k = 0; k < index; ++k)
    if (!combination[k].is_zero()) built[k] = -combination[k] * scale;
  built[index] = scale;
  for (auto& [pivot, row] : rows_) row.combination.resize(index + 1);
  const std::size_t pivot = residual.begin()->first;
  rows_.emplace(pivot, Row{std::move(residual), std::move(built)});
  return true;
}

std::optional<DenseVector> SpanBasis::coordinates(const SparseVector& v) const {
  DenseVector combination;
  if (!reduce(v, combination).empty()) return std::nullopt;
  combination.resize(rows_.size());
  return combination;
}

std::vector<DenseVector> nullspace(const std::vector<SparseVector>& vectors) {
  SpanBasis span;
  std::vector<std::size_t> accepted;
  std::vector<DenseVector> out;
  for (std::size_t p = 0; p < vectors.size(); ++p) {
    auto coords = span.coordinates(vectors[p]);
    if (!coords) {
      span.add(vectors[p]);
      accepted.push_back(p);
      continue;
    }
    DenseVector relation(vectors.size());
    relation[p] = FieldScalar(1);
    for (std::size_t k = 0; k < coords->size(); ++k)
      if (!(*coords)[k].is_zero()) relation[accepted[k]] = -(*coords)[k];
    out.push_back(std::move(relation));
  }
  return out;
}

}  // namespace superflag
