#include <doctest.h>

#include "superflag/flag_charts.hpp"
#include "superflag/osp_algebra.hpp"

using namespace superflag;

TEST_CASE("flag type validation") {
  CHECK_NOTHROW(validate_flag_type({3, 1}, {2, 1}));
  CHECK_NOTHROW(validate_flag_type({2, 2}, {1, 0}));
  CHECK_THROWS_AS(validate_flag_type({2, 0}, {1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(validate_flag_type({2, 2}, {1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(validate_flag_type({2, 3}, {1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(validate_flag_type({2, 1}, {1}), std::invalid_argument);
  CHECK(parse_flag_type("k=3,1 l=2,1") == FlagType{{3, 1}, {2, 1}});
  CHECK_THROWS(parse_flag_type("k=3,1"));
  CHECK(FlagType{{3, 1}, {2, 1}}.dimension() == std::pair<std::size_t, std::size_t>{3, 3});
}

TEST_CASE("chart placement") {
  const Chart g = build_chart(validate_flag_type({2, 1}, {0, 0}), {IndexSet{{2}, {}}});
  REQUIRE(g.matrices.size() == 1);
  CHECK(g.matrices[0](0, 0).to_string() == "x1_1_1");
  CHECK(g.matrices[0](1, 0).to_string() == "1");

  const Chart c = build_chart(validate_flag_type({3, 1}, {2, 1}), {IndexSet{{2}, {2}}});
  const SuperMatrix& z = c.matrices[0];
  CHECK(z.shape() == BlockShape{3, 2, 1, 1});
  CHECK(z(1, 0).to_string() == "1");
  CHECK(z(1, 1).is_zero());
  CHECK(z(4, 1).to_string() == "1");
  CHECK(z(4, 0).is_zero());
  CHECK(c.coordinates.size() == 6);
  CHECK(c.coordinate("xi1_1_1").has_value());
  CHECK(parse_index_set("1,3;") == IndexSet{{1, 3}, {}});
}

TEST_CASE("action by the identity") {
  const Chart c = build_chart(validate_flag_type({3, 1}, {2, 1}), {IndexSet{{2}, {2}}});
  const SuperMatrix e = SuperMatrix::identity(BlockShape::square(3, 2));
  CHECK(act(e, c) == static_cast<const ChartPoint&>(c));
}

TEST_CASE("action by a block-diagonal matrix at the origin") {
  // Z = (1; eta) -> (2; 3 eta) / 2.
  const Chart c = build_chart(validate_flag_type({1, 1}, {1, 0}), {IndexSet{{1}, {}}});
  const SuperMatrix l = to_symbolic(parse_numeric_matrix("2, 0; 0, 3", BlockShape::square(1, 1)));
  const ChartPoint moved = act(l, c);
  CHECK(moved.matrices[0](0, 0).to_string() == "1");
  CHECK(moved.matrices[0](1, 0).to_string() == "3/2*eta1_1_1");
}

TEST_CASE("Euler field on a super-Grassmannian") {
  const Chart c = build_chart(validate_flag_type({2, 1}, {1, 1}), {IndexSet{{1}, {1}}});
  const NumericMatrix x = parse_numeric_matrix("5, 0, 0; 0, 7, 0; 0, 0, 11", BlockShape::square(2, 1));
  CHECK(fundamental_field(x, c).to_string() == "2*x1_2_1*d/dx1_2_1 - 4*xi1_2_1*d/dxi1_2_1");
}

TEST_CASE("fundamental fields reverse brackets") {
  const IsotropicChart ic = isotropic_chart(2, 1, {1}, {0});
  const OspBasis b = basis(OspFlavor::odd, 1, 1);
  std::vector<VectorField> nu;
  for (const auto& g : b.generators) nu.push_back(fundamental_field(g.matrix, ic.chart));
  for (std::size_t p = 0; p < b.size(); ++p) {
    for (std::size_t q = 0; q < b.size(); ++q) {
      const NumericMatrix xy = superbracket(b.generators[p].matrix, b.generators[q].matrix);
      CHECK(fundamental_field(xy, ic.chart) == bracket(nu[q], nu[p]));
    }
  }
  CHECK(kFundamentalFieldSign == -1);
}

TEST_CASE("isotropic chart relations") {
  const IsotropicChart ic = isotropic_chart(2, 1);
  const RingPtr& ring = ic.chart.ring;
  CHECK(ic.dependent.at(ring->id("z1_1_1")).to_string() == "-1/2*x1_1^2");
  CHECK(ic.dependent.at(ring->id("zeta1_1_1")).to_string() == "-eta1_1_1 - x1_1*xi1_1");
  CHECK(ic.isotropy_residual().is_zero());
  for (std::size_t k1 = 1; k1 <= 3; ++k1)
    for (std::size_t l1 = 1; l1 <= 2; ++l1) CHECK(isotropic_chart(k1, l1).isotropy_residual().is_zero());
  CHECK(isotropic_chart(3, 2, {1}, {0}).isotropy_residual().is_zero());
}

TEST_CASE("constant functions predicate") {
  CHECK(constant_functions_predicate(validate_flag_type({2, 1}, {1, 1})));
  const FlagType f = validate_flag_type({2, 2, 1}, {2, 1, 0});
  CHECK(constant_functions_predicate(f, ConstantReading::literal));
  CHECK_FALSE(constant_functions_predicate(f, ConstantReading::natural));
  // P^{1|1}: its only odd coordinate is a section of O(-1), so global functions are constants.
  CHECK(constant_functions_predicate(validate_flag_type({2, 1}, {1, 0})));
  // Gr_{1|0}(C^{1|1}) is the odd line: functions are the Grassmann algebra on one generator.
  CHECK_FALSE(constant_functions_predicate(validate_flag_type({1, 1}, {1, 0})));
  // Mirrored family: Gr_{0|1}(C^{1|1}).
  CHECK_FALSE(constant_functions_predicate(validate_flag_type({1, 0}, {1, 1})));
  CHECK_THROWS_AS(constant_functions_predicate(validate_flag_type({3, 1}, {0, 0})), std::invalid_argument);
}
