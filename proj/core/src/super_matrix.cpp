#include "superflag/super_matrix.hpp"

#include <sstream>

#include "superflag/detail/expr_parser.hpp"

namespace superflag {

std::string BlockShape::to_string() const {
  std::ostringstream os;
  os << even_rows << '|' << odd_rows;
  if (!is_square()) os << 'x' << even_cols << '|' << odd_cols;
  return os.str();
}

NumericMatrix invert(const NumericMatrix& m) {
  if (!m.shape().is_square()) throw std::invalid_argument("only square matrices are invertible");
  const std::size_t n = m.rows();
  NumericMatrix a = m;
  NumericMatrix inv = NumericMatrix::identity(m.shape());
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a(pivot, col).is_zero()) ++pivot;
    if (pivot == n) throw std::domain_error("matrix body is singular");
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) {
        std::swap(a(pivot, c), a(col, c));
        std::swap(inv(pivot, c), inv(col, c));
      }
    }
    const FieldScalar scale = a(col, col).inverse();
    for (std::size_t c = 0; c < n; ++c) {
      if (!a(col, c).is_zero()) a(col, c) *= scale;
      if (!inv(col, c).is_zero()) inv(col, c) *= scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a(r, col).is_zero()) continue;
      const FieldScalar f = a(r, col);
      for (std::size_t c = 0; c < n; ++c) {
        if (!a(col, c).is_zero()) a(r, c) -= f * a(col, c);
        if (!inv(col, c).is_zero()) inv(r, c) -= f * inv(col, c);
      }
    }
  }
  return inv;
}

namespace {

/// Upper bound on the nilpotency order of any product of nilpotent entries.
std::size_t nilpotent_budget(const SuperMatrix& m) {
  for (const auto& e : m.entries()) {
    if (!e.ring()) continue;
    std::size_t budget = 1;
    for (const auto& v : e.ring()->variables()) {
      if (v.parity == Parity::odd) budget += 1;
      else if (v.nilpotency > 1) budget += v.nilpotency - 1;
    }
    return budget;
  }
  return 1;
}

}  // namespace

SuperMatrix invert(const SuperMatrix& m) {
  if (!m.shape().is_square()) throw std::invalid_argument("only square matrices are invertible");
  NumericMatrix body(m.shape());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const SuperPoly b = m(r, c).body();
      if (!b.is_constant()) throw std::domain_error("matrix body is not numeric");
      body(r, c) = b.constant_term();
    }
  }
  const SuperMatrix body_inv = to_symbolic(invert(body));
  const SuperMatrix k = body_inv * (m - to_symbolic(body));
  const SuperMatrix id = SuperMatrix::identity(m.shape());
  SuperMatrix sum = id;
  SuperMatrix power = id;
  const std::size_t budget = nilpotent_budget(m);
  for (std::size_t step = 0;; ++step) {
    power = -(power * k);
    if (power.is_zero()) break;
    if (step > budget) throw std::logic_error("Neumann series failed to terminate");
    sum = sum + power;
  }
  return sum * body_inv;
}

SuperMatrix to_symbolic(const NumericMatrix& m) {
  SuperMatrix out(m.shape());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!m(r, c).is_zero()) out(r, c) = SuperPoly(m(r, c));
  return out;
}

NumericMatrix to_numeric(const SuperMatrix& m) {
  NumericMatrix out(m.shape());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (!m(r, c).is_constant())
        throw std::invalid_argument("entry (" + std::to_string(r + 1) + "," + std::to_string(c + 1) +
                                    ") is not constant");
      out(r, c) = m(r, c).constant_term();
    }
  }
  return out;
}

namespace {

template <class T>
std::string render(const BasicSuperMatrix<T>& m) {
  std::string s = "[";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (r) s += "; ";
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) s += ", ";
      s += m(r, c).to_string();
    }
  }
  return s + "]";
}

template <class T, class ParseEntry>
BasicSuperMatrix<T> parse_literal(std::string_view text, BlockShape shape, ParseEntry parse_entry) {
  std::string_view body = detail::trim(text);
  if (!body.empty() && body.front() == '[') {
    if (body.back() != ']') throw std::invalid_argument("unbalanced brackets in matrix literal");
    body = detail::trim(body.substr(1, body.size() - 2));
  }
  const auto rows = detail::split_top_level(body, ';');
  if (rows.size() != shape.rows())
    throw std::invalid_argument("matrix literal has " + std::to_string(rows.size()) + " rows, expected " +
                                std::to_string(shape.rows()));
  BasicSuperMatrix<T> m(shape);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const auto cells = detail::split_top_level(rows[r], ',');
    if (cells.size() != shape.cols())
      throw std::invalid_argument("row " + std::to_string(r + 1) + " has " + std::to_string(cells.size()) +
                                  " entries, expected " + std::to_string(shape.cols()));
    for (std::size_t c = 0; c < cells.size(); ++c) m(r, c) = parse_entry(cells[c]);
  }
  return m;
}

std::size_t parse_count(std::string_view s) {
  s = detail::trim(s);
  if (s.empty()) throw std::invalid_argument("empty block size");
  std::size_t v = 0;
  for (char ch : s) {
    if (ch < '0' || ch > '9') throw std::invalid_argument("bad block size '" + std::string(s) + "'");
    v = v * 10 + static_cast<std::size_t>(ch - '0');
  }
  return v;
}

std::pair<std::size_t, std::size_t> parse_pair(std::string_view s) {
  const auto bar = s.find('|');
  if (bar == std::string_view::npos) throw std::invalid_argument("block size must look like p|q");
  return {parse_count(s.substr(0, bar)), parse_count(s.substr(bar + 1))};
}

}  // namespace

std::string to_string(const NumericMatrix& m) { return render(m); }
std::string to_string(const SuperMatrix& m) { return render(m); }

NumericMatrix parse_numeric_matrix(std::string_view text, BlockShape shape) {
  return parse_literal<FieldScalar>(text, shape, [](std::string_view s) { return FieldScalar::parse(s); });
}

SuperMatrix parse_super_matrix(std::string_view text, BlockShape shape, const RingPtr& ring) {
  return parse_literal<SuperPoly>(text, shape, [&ring](std::string_view s) { return SuperPoly::parse(s, ring); });
}

BlockShape parse_block_shape(std::string_view text) {
  text = detail::trim(text);
  const auto x = text.find('x');
  if (x == std::string_view::npos) {
    auto [p, q] = parse_pair(text);
    return BlockShape::square(p, q);
  }
  auto [p, q] = parse_pair(text.substr(0, x));
  auto [r, s] = parse_pair(text.substr(x + 1));
  return BlockShape{p, q, r, s};
}

}  // namespace superflag
