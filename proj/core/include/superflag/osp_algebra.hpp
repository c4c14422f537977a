#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "superflag/linear_span.hpp"
#include "superflag/super_matrix.hpp"

namespace superflag {

/// `odd`: osp(2m+1|2n) with the five-block Gram matrix. `even`: osp(2m|2n).
/// `primed`: the diagonalised form E_t + (0, E_n; -E_n, 0), where t is passed
/// in place of m.
enum class OspFlavor { odd, even, primed };

const char* to_string(OspFlavor f);

struct GramForm {
  OspFlavor flavor = OspFlavor::odd;
  std::size_t m = 0;  // t for the primed flavor
  std::size_t n = 0;
  NumericMatrix matrix;

  const BlockShape& shape() const { return matrix.shape(); }
};

/// Throws std::invalid_argument when m = n = 0.
GramForm gram_form(OspFlavor flavor, std::size_t m, std::size_t n);

/// Block parameter a generator comes from, with 1-based indices; `j` is 0 for
/// the single-index blocks G1..G4.
struct GeneratorTag {
  std::string block;
  std::size_t i = 0;
  std::size_t j = 0;

  std::string to_string() const;
  bool operator==(const GeneratorTag&) const = default;
};

struct Generator {
  GeneratorTag tag;
  Parity parity = Parity::even;
  NumericMatrix matrix;
};

struct OspBasis {
  GramForm form;
  std::vector<Generator> generators;

  std::size_t size() const { return generators.size(); }
  std::size_t count(Parity p) const;
  std::vector<NumericMatrix> matrices() const;
  /// Index of the generator with this tag, if present.
  std::optional<std::size_t> find(const GeneratorTag& tag) const;
};

/// X^{ST} Gamma + Gamma X; zero exactly on members.
NumericMatrix defining_residual(const NumericMatrix& x, const GramForm& form);
SuperMatrix defining_residual(const SuperMatrix& x, const GramForm& form);

/// Throws std::invalid_argument on a shape mismatch or inhomogeneous input.
bool is_member(const NumericMatrix& x, const GramForm& form);
bool is_member(const SuperMatrix& x, const GramForm& form);

/// One generator per free block parameter, even generators first. Primed
/// generators are the standard ones with block rows permuted by (S S^T)^{-1},
/// which keeps the tags of the displayed primed block forms.
OspBasis basis(OspFlavor flavor, std::size_t m, std::size_t n);

/// Standard basis E_ij of gl(p|q); the parity of E_ij is |i| + |j|.
std::vector<NumericMatrix> gl_basis(std::size_t p, std::size_t q);

struct StructureConstant {
  std::size_t p, q, r;  // [X_p, X_q] = sum_r c * X_r
  FieldScalar coefficient;
};

struct ClosureReport {
  std::size_t pairs_checked = 0;
  std::vector<StructureConstant> constants;
  /// First pair whose bracket left the span.
  std::optional<std::pair<std::size_t, std::size_t>> failure;

  bool closed() const { return !failure.has_value(); }
};

/// Brackets every unordered pair (p <= q) and re-expands it in the basis.
ClosureReport closure_check(const std::vector<NumericMatrix>& generators);
ClosureReport closure_check(const OspBasis& b);

struct JacobiReport {
  std::size_t triples_checked = 0;
  std::optional<std::array<std::size_t, 3>> failure;

  bool holds() const { return !failure.has_value(); }
};

/// [A,[B,C]] = [[A,B],C] + (-1)^{|A||B|}[B,[A,C]] over all ordered triples.
JacobiReport jacobi_check(const std::vector<NumericMatrix>& generators);

/// Basis (as coefficient vectors over `generators`) of the elements commuting
/// with every generator.
std::vector<DenseVector> center(const std::vector<NumericMatrix>& generators);
std::vector<DenseVector> center(OspFlavor flavor, std::size_t m, std::size_t n);

/// The matrix S with S^T Gamma S = Gamma', for osp(2k1-1|2l1) (`odd`) or
/// osp(2k1|2l1) (`even`).
NumericMatrix basis_change_S(OspFlavor flavor, std::size_t k1, std::size_t l1);

/// (S S^T)^{-1}; it multiplies standard block forms into primed ones.
NumericMatrix primed_row_permutation(OspFlavor flavor, std::size_t k1, std::size_t l1);

/// S^{-1} X S, carrying osp(Gamma) onto osp(Gamma').
NumericMatrix conjugate_to_primed(const NumericMatrix& x, const NumericMatrix& s);

/// X -> diag(0, X) from primed osp(2k1-1|2l1) into primed osp(2k1|2l1).
/// Throws std::invalid_argument if X is not in the source algebra.
NumericMatrix embed_j(const NumericMatrix& x);
SuperMatrix embed_j(const SuperMatrix& x);

/// True for primed osp(2k1|2l1) members with vanishing first row and column.
bool in_j_image(const NumericMatrix& x);

enum class Parabolic { p, p1 };
enum class Layout { standard, primed };

/// Stabiliser subalgebras: `p` in osp(2k1-1|2l1), `p1` in osp(2k1|2l1).
OspBasis parabolic_basis(Parabolic which, std::size_t k1, std::size_t l1, Layout layout = Layout::standard);

}  // namespace superflag
