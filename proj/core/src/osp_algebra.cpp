#include "superflag/osp_algebra.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace superflag {

const char* to_string(OspFlavor f) {
  switch (f) {
    case OspFlavor::odd: return "odd";
    case OspFlavor::even: return "even";
    default: return "primed";
  }
}

std::string GeneratorTag::to_string() const {
  std::string s = block + "(" + std::to_string(i);
  if (j != 0) s += "," + std::to_string(j);
  return s + ")";
}

std::size_t OspBasis::count(Parity p) const {
  return static_cast<std::size_t>(
      std::count_if(generators.begin(), generators.end(), [p](const Generator& g) { return g.parity == p; }));
}

std::vector<NumericMatrix> OspBasis::matrices() const {
  std::vector<NumericMatrix> out;
  out.reserve(generators.size());
  for (const auto& g : generators) out.push_back(g.matrix);
  return out;
}

std::optional<std::size_t> OspBasis::find(const GeneratorTag& tag) const {
  for (std::size_t k = 0; k < generators.size(); ++k)
    if (generators[k].tag == tag) return k;
  return std::nullopt;
}

namespace {

/// Row/column offsets of the standard block layout (a1, a2, mid, b1, b2).
struct StandardLayout {
  std::size_t m, n;
  bool has_mid;

  std::size_t a1(std::size_t i) const { return i; }
  std::size_t a2(std::size_t i) const { return m + i; }
  std::size_t mid() const { return 2 * m; }
  std::size_t even() const { return 2 * m + (has_mid ? 1 : 0); }
  std::size_t b1(std::size_t j) const { return even() + j; }
  std::size_t b2(std::size_t j) const { return even() + n + j; }
  BlockShape shape() const { return BlockShape::square(even(), 2 * n); }
};

void check_sizes(std::size_t m, std::size_t n) {
  if (m == 0 && n == 0) throw std::invalid_argument("osp sizes must not both be zero");
}

}  // namespace

GramForm gram_form(OspFlavor flavor, std::size_t m, std::size_t n) {
  check_sizes(m, n);
  GramForm g;
  g.flavor = flavor;
  g.m = m;
  g.n = n;
  if (flavor == OspFlavor::primed) {
    g.matrix = NumericMatrix(BlockShape::square(m, 2 * n));
    for (std::size_t i = 0; i < m; ++i) g.matrix(i, i) = 1;
    for (std::size_t j = 0; j < n; ++j) {
      g.matrix(m + j, m + n + j) = 1;
      g.matrix(m + n + j, m + j) = -1;
    }
    return g;
  }
  const StandardLayout lay{m, n, flavor == OspFlavor::odd};
  g.matrix = NumericMatrix(lay.shape());
  for (std::size_t i = 0; i < m; ++i) {
    g.matrix(lay.a1(i), lay.a2(i)) = 1;
    g.matrix(lay.a2(i), lay.a1(i)) = 1;
  }
  if (lay.has_mid) g.matrix(lay.mid(), lay.mid()) = 1;
  for (std::size_t j = 0; j < n; ++j) {
    g.matrix(lay.b1(j), lay.b2(j)) = 1;
    g.matrix(lay.b2(j), lay.b1(j)) = -1;
  }
  return g;
}

NumericMatrix defining_residual(const NumericMatrix& x, const GramForm& form) {
  if (!(x.shape() == form.shape()))
    throw std::invalid_argument("matrix shape " + x.shape().to_string() + " does not match the form " +
                                form.shape().to_string());
  return supertranspose(x) * form.matrix + form.matrix * x;
}

SuperMatrix defining_residual(const SuperMatrix& x, const GramForm& form) {
  if (!(x.shape() == form.shape()))
    throw std::invalid_argument("matrix shape " + x.shape().to_string() + " does not match the form " +
                                form.shape().to_string());
  const SuperMatrix g = to_symbolic(form.matrix);
  return supertranspose(x) * g + g * x;
}

bool is_member(const NumericMatrix& x, const GramForm& form) { return defining_residual(x, form).is_zero(); }
bool is_member(const SuperMatrix& x, const GramForm& form) { return defining_residual(x, form).is_zero(); }

namespace {

struct Builder {
  BlockShape shape;
  std::vector<Generator> out;

  void add(std::string block, std::size_t i, std::size_t j, Parity parity,
           std::initializer_list<std::tuple<std::size_t, std::size_t, long>> entries) {
    NumericMatrix x(shape);
    for (const auto& [r, c, v] : entries) x(r, c) += FieldScalar(v);
    out.push_back(Generator{GeneratorTag{std::move(block), i + 1, j == npos ? 0 : j + 1}, parity, std::move(x)});
  }
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

std::vector<Generator> standard_generators(std::size_t m, std::size_t n, bool has_mid) {
  const StandardLayout L{m, n, has_mid};
  Builder b{L.shape(), {}};
  constexpr auto none = Builder::npos;
  const Parity ev = Parity::even;
  const Parity od = Parity::odd;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) b.add("A11", i, j, ev, {{L.a1(i), L.a1(j), 1}, {L.a2(j), L.a2(i), -1}});
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) b.add("A12", i, j, ev, {{L.a1(i), L.a2(j), 1}, {L.a1(j), L.a2(i), -1}});
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) b.add("A21", i, j, ev, {{L.a2(i), L.a1(j), 1}, {L.a2(j), L.a1(i), -1}});
  if (has_mid) {
    for (std::size_t i = 0; i < m; ++i) b.add("G1", i, none, ev, {{L.a1(i), L.mid(), 1}, {L.mid(), L.a2(i), -1}});
    for (std::size_t i = 0; i < m; ++i) b.add("G2", i, none, ev, {{L.a2(i), L.mid(), 1}, {L.mid(), L.a1(i), -1}});
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) b.add("B11", i, j, ev, {{L.b1(i), L.b1(j), 1}, {L.b2(j), L.b2(i), -1}});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      if (i == j) b.add("B12", i, j, ev, {{L.b1(i), L.b2(i), 1}});
      else b.add("B12", i, j, ev, {{L.b1(i), L.b2(j), 1}, {L.b1(j), L.b2(i), 1}});
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      if (i == j) b.add("B21", i, j, ev, {{L.b2(i), L.b1(i), 1}});
      else b.add("B21", i, j, ev, {{L.b2(i), L.b1(j), 1}, {L.b2(j), L.b1(i), 1}});
    }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) b.add("C11", i, j, od, {{L.a1(i), L.b1(j), 1}, {L.b2(j), L.a2(i), 1}});
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) b.add("C12", i, j, od, {{L.a1(i), L.b2(j), 1}, {L.b1(j), L.a2(i), -1}});
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) b.add("C21", i, j, od, {{L.a2(i), L.b1(j), 1}, {L.b2(j), L.a1(i), 1}});
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) b.add("C22", i, j, od, {{L.a2(i), L.b2(j), 1}, {L.b1(j), L.a1(i), -1}});
  if (has_mid) {
    for (std::size_t j = 0; j < n; ++j) b.add("G3", j, none, od, {{L.mid(), L.b1(j), 1}, {L.b2(j), L.mid(), 1}});
    for (std::size_t j = 0; j < n; ++j) b.add("G4", j, none, od, {{L.mid(), L.b2(j), 1}, {L.b1(j), L.mid(), -1}});
  }
  return std::move(b.out);
}

/// Standard flavor and k1 behind a primed size t.
std::pair<OspFlavor, std::size_t> split_primed(std::size_t t) {
  return t % 2 ? std::make_pair(OspFlavor::odd, (t + 1) / 2) : std::make_pair(OspFlavor::even, t / 2);
}

}  // namespace

OspBasis basis(OspFlavor flavor, std::size_t m, std::size_t n) {
  OspBasis b;
  b.form = gram_form(flavor, m, n);
  if (flavor == OspFlavor::primed) {
    const auto [std_flavor, k1] = split_primed(m);
    const std::size_t std_m = std_flavor == OspFlavor::odd ? k1 - 1 : k1;
    const NumericMatrix perm = primed_row_permutation(std_flavor, k1, n);
    for (auto& g : standard_generators(std_m, n, std_flavor == OspFlavor::odd)) {
      g.matrix = perm * g.matrix;
      b.generators.push_back(std::move(g));
    }
    return b;
  }
  b.generators = standard_generators(m, n, flavor == OspFlavor::odd);
  return b;
}

std::vector<NumericMatrix> gl_basis(std::size_t p, std::size_t q) {
  std::vector<NumericMatrix> out;
  const BlockShape shape = BlockShape::square(p, q);
  for (std::size_t r = 0; r < p + q; ++r) {
    for (std::size_t c = 0; c < p + q; ++c) {
      NumericMatrix e(shape);
      e(r, c) = 1;
      out.push_back(std::move(e));
    }
  }
  return out;
}

namespace {

/// Sparse stand-in used where thousands of tiny brackets are formed.
using Sparse = std::map<std::pair<std::size_t, std::size_t>, FieldScalar>;

Sparse to_sparse(const NumericMatrix& m) {
  Sparse s;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!m(r, c).is_zero()) s.emplace(std::make_pair(r, c), m(r, c));
  return s;
}

void accumulate(Sparse& acc, const std::pair<std::size_t, std::size_t>& key, const FieldScalar& v) {
  auto [it, inserted] = acc.try_emplace(key, v);
  if (!inserted) {
    it->second += v;
    if (it->second.is_zero()) acc.erase(it);
  }
}

Sparse product(const Sparse& a, const Sparse& b) {
  Sparse out;
  for (const auto& [ak, av] : a) {
    for (auto it = b.lower_bound({ak.second, 0}); it != b.end() && it->first.first == ak.second; ++it)
      accumulate(out, {ak.first, it->first.second}, av * it->second);
  }
  return out;
}

Sparse bracket(const Sparse& a, Parity pa, const Sparse& b, Parity pb) {
  Sparse out = product(a, b);
  const bool anti = is_odd(pa) && is_odd(pb);
  for (const auto& [k, v] : product(b, a)) accumulate(out, k, anti ? v : -v);
  return out;
}

std::vector<Parity> parities(const std::vector<NumericMatrix>& gens) {
  std::vector<Parity> out;
  out.reserve(gens.size());
  for (const auto& g : gens) out.push_back(g.parity());
  return out;
}

}  // namespace

ClosureReport closure_check(const std::vector<NumericMatrix>& generators) {
  ClosureReport report;
  SpanBasis span;
  for (const auto& g : generators)
    if (!span.add(flatten(g))) throw std::invalid_argument("generators are linearly dependent");
  const auto par = parities(generators);
  std::vector<Sparse> sparse;
  for (const auto& g : generators) sparse.push_back(to_sparse(g));
  const std::size_t cols = generators.empty() ? 0 : generators.front().cols();
  for (std::size_t p = 0; p < generators.size(); ++p) {
    for (std::size_t q = p; q < generators.size(); ++q) {
      ++report.pairs_checked;
      SparseVector v;
      for (const auto& [k, x] : bracket(sparse[p], par[p], sparse[q], par[q])) v.emplace(k.first * cols + k.second, x);
      const auto coords = span.coordinates(v);
      if (!coords) {
        report.failure = std::make_pair(p, q);
        return report;
      }
      for (std::size_t r = 0; r < coords->size(); ++r)
        if (!(*coords)[r].is_zero()) report.constants.push_back({p, q, r, (*coords)[r]});
    }
  }
  return report;
}

ClosureReport closure_check(const OspBasis& b) { return closure_check(b.matrices()); }

JacobiReport jacobi_check(const std::vector<NumericMatrix>& generators) {
  JacobiReport report;
  const std::size_t n = generators.size();
  const auto par = parities(generators);
  std::vector<Sparse> s;
  for (const auto& g : generators) s.push_back(to_sparse(g));
  std::vector<Sparse> pair(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) pair[a * n + b] = bracket(s[a], par[a], s[b], par[b]);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        ++report.triples_checked;
        const Sparse lhs = bracket(s[a], par[a], pair[b * n + c], par[b] + par[c]);
        Sparse rhs = bracket(pair[a * n + b], par[a] + par[b], s[c], par[c]);
        const bool flip = is_odd(par[a]) && is_odd(par[b]);
        for (const auto& [k, v] : bracket(s[b], par[b], pair[a * n + c], par[a] + par[c]))
          accumulate(rhs, k, flip ? -v : v);
        if (lhs != rhs) {
          report.failure = std::array<std::size_t, 3>{a, b, c};
          return report;
        }
      }
    }
  }
  return report;
}

std::vector<DenseVector> center(const std::vector<NumericMatrix>& generators) {
  const std::size_t n = generators.size();
  if (n == 0) return {};
  const auto par = parities(generators);
  std::vector<Sparse> s;
  for (const auto& g : generators) s.push_back(to_sparse(g));
  const std::size_t cols = generators.front().cols();
  const std::size_t block = generators.front().rows() * cols;
  std::vector<SparseVector> images(n);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t i = 0; i < n; ++i)
      for (const auto& [k, v] : bracket(s[p], par[p], s[i], par[i])) images[p].emplace(i * block + k.first * cols + k.second, v);
  return nullspace(images);
}

std::vector<DenseVector> center(OspFlavor flavor, std::size_t m, std::size_t n) {
  return center(basis(flavor, m, n).matrices());
}

NumericMatrix basis_change_S(OspFlavor flavor, std::size_t k1, std::size_t l1) {
  if (flavor == OspFlavor::primed) throw std::invalid_argument("basis change is defined for the odd or even flavor");
  if (flavor == OspFlavor::odd && k1 == 0) throw std::invalid_argument("osp(2k1-1|2l1) needs k1 >= 1");
  const bool odd = flavor == OspFlavor::odd;
  const std::size_t m = odd ? k1 - 1 : k1;
  check_sizes(m + (odd ? 1 : 0), l1);
  const StandardLayout L{m, l1, odd};
  const FieldScalar h(0, 0, Rational(1, 2), 0);   // 1/sqrt2
  const FieldScalar ih(0, 0, 0, Rational(1, 2));  // i/sqrt2
  NumericMatrix s(L.shape());
  for (std::size_t i = 0; i < m; ++i) {
    s(L.a1(i), L.a1(i)) = h;
    s(L.a1(i), L.a2(i)) = ih;
    s(L.a2(i), L.a1(i)) = h;
    s(L.a2(i), L.a2(i)) = -ih;
  }
  if (odd) s(L.mid(), L.mid()) = 1;
  for (std::size_t j = 0; j < 2 * l1; ++j) s(L.even() + j, L.even() + j) = 1;
  return s;
}

NumericMatrix primed_row_permutation(OspFlavor flavor, std::size_t k1, std::size_t l1) {
  const NumericMatrix s = basis_change_S(flavor, k1, l1);
  return invert(s * transpose(s));
}

NumericMatrix conjugate_to_primed(const NumericMatrix& x, const NumericMatrix& s) { return invert(s) * x * s; }

namespace {

template <class T>
BasicSuperMatrix<T> embed_impl(const BasicSuperMatrix<T>& x) {
  const BlockShape& sh = x.shape();
  if (!sh.is_square() || sh.even_rows % 2 == 0 || sh.odd_rows % 2 != 0)
    throw std::invalid_argument("embed_j expects a primed osp(2k1-1|2l1) matrix, got shape " + sh.to_string());
  if (!is_member(x, gram_form(OspFlavor::primed, sh.even_rows, sh.odd_rows / 2)))
    throw std::invalid_argument("embed_j: argument is not in primed osp(2k1-1|2l1)");
  BasicSuperMatrix<T> out(BlockShape::square(sh.even_rows + 1, sh.odd_rows));
  for (std::size_t r = 0; r < x.rows(); ++r)
    for (std::size_t c = 0; c < x.cols(); ++c) out(r + 1, c + 1) = x(r, c);
  return out;
}

}  // namespace

NumericMatrix embed_j(const NumericMatrix& x) { return embed_impl(x); }
SuperMatrix embed_j(const SuperMatrix& x) { return embed_impl(x); }

bool in_j_image(const NumericMatrix& x) {
  const BlockShape& sh = x.shape();
  if (!sh.is_square() || sh.even_rows == 0 || sh.even_rows % 2 != 0 || sh.odd_rows % 2 != 0) return false;
  for (std::size_t k = 0; k < x.rows(); ++k)
    if (!x(0, k).is_zero() || !x(k, 0).is_zero()) return false;
  return is_member(x, gram_form(OspFlavor::primed, sh.even_rows, sh.odd_rows / 2));
}

OspBasis parabolic_basis(Parabolic which, std::size_t k1, std::size_t l1, Layout layout) {
  if (k1 == 0) throw std::invalid_argument("parabolic subalgebras need k1 >= 1");
  const bool small = which == Parabolic::p;
  const OspFlavor flavor = small ? OspFlavor::odd : OspFlavor::even;
  const OspBasis ambient = basis(flavor, small ? k1 - 1 : k1, l1);
  static const std::set<std::string> p_blocks = {"A11", "A21", "G2", "G3", "C11", "C21", "C22", "B11", "B21"};
  static const std::set<std::string> p1_blocks = {"A11", "A21", "C11", "C21", "C22", "B11", "B21"};
  const auto& keep = small ? p_blocks : p1_blocks;
  OspBasis out;
  out.form = ambient.form;
  for (const auto& g : ambient.generators)
    if (keep.count(g.tag.block)) out.generators.push_back(g);
  if (layout == Layout::primed) {
    const NumericMatrix perm = primed_row_permutation(flavor, k1, l1);
    for (auto& g : out.generators) g.matrix = perm * g.matrix;
    out.form = gram_form(OspFlavor::primed, small ? 2 * k1 - 1 : 2 * k1, l1);
  }
  return out;
}

}  // namespace superflag
