#include <doctest.h>

#include <random>

#include "superflag/field_scalar.hpp"

using superflag::FieldScalar;
using superflag::Rational;

namespace {

const FieldScalar kI = FieldScalar::i();
const FieldScalar kR2 = FieldScalar::sqrt2();

FieldScalar random_scalar(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-9, 9), den(1, 5);
  auto q = [&] { return Rational(num(rng), den(rng)); };
  return {q(), q(), q(), q()};
}

}  // namespace

TEST_CASE("addition") {
  CHECK(add(FieldScalar(1), kI) == FieldScalar(1, 1, 0, 0));
  CHECK(add(kR2, 0) == kR2);
  const FieldScalar half_r2(0, 0, Rational(1, 2), 0);
  CHECK(half_r2 + half_r2 == kR2);
}

TEST_CASE("multiplication") {
  CHECK(mul(kI, kI) == FieldScalar(-1));
  const FieldScalar inv_r2 = inv(kR2);
  CHECK(mul(inv_r2, inv_r2) == FieldScalar(Rational(1, 2)));
  CHECK((1 + kI) * (1 - kI) == FieldScalar(2));
  CHECK(kR2 * kR2 == FieldScalar(2));
  CHECK((kI * kR2) * (kI * kR2) == FieldScalar(-2));
}

TEST_CASE("inversion") {
  CHECK(inv(FieldScalar(2)) == FieldScalar(Rational(1, 2)));
  CHECK(inv(kI) == -kI);
  CHECK(inv(1 + kI) == FieldScalar(Rational(1, 2), Rational(-1, 2), 0, 0));
  CHECK_THROWS_AS(FieldScalar().inverse(), std::domain_error);
}

TEST_CASE("conjugation") {
  CHECK(FieldScalar(1, 2, 3, 4).conj() == FieldScalar(1, -2, 3, -4));
}

TEST_CASE("rendering and parsing round trip") {
  CHECK(FieldScalar().to_string() == "0");
  CHECK(FieldScalar(Rational(-3, 4)).to_string() == "-3/4");
  CHECK(FieldScalar::parse("(1 + i)*r2/2") == FieldScalar(0, 0, Rational(1, 2), Rational(1, 2)));
  CHECK(FieldScalar::parse("-i") == -kI);
  std::mt19937_64 rng(7);
  for (int t = 0; t < 50; ++t) {
    const FieldScalar x = random_scalar(rng);
    CHECK(FieldScalar::parse(x.to_string()) == x);
  }
  CHECK_THROWS_AS(FieldScalar::parse("1 +"), std::invalid_argument);
  CHECK_THROWS_AS(FieldScalar::parse("q"), std::invalid_argument);
}

TEST_CASE("field axioms on random samples") {
  std::mt19937_64 rng(20240611);
  for (int t = 0; t < 200; ++t) {
    const FieldScalar x = random_scalar(rng), y = random_scalar(rng), z = random_scalar(rng);
    CHECK((x * y) * z == x * (y * z));
    CHECK((x + y) + z == x + (y + z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(x * y == y * x);
    CHECK(x + y == y + x);
    if (!x.is_zero()) CHECK((x * inv(x)).is_one());
  }
}

TEST_CASE("equality is coordinatewise") {
  CHECK(FieldScalar(Rational(2, 4)) == FieldScalar(Rational(1, 2)));
  CHECK_FALSE(FieldScalar(0, 0, 1, 0) == FieldScalar(0, 0, 0, 1));
  CHECK(FieldScalar(1).is_rational());
  CHECK_FALSE(kI.is_rational());
}
