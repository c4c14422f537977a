#pragma once

#include <gmpxx.h>

#include <array>
#include <iosfwd>
#include <string>
#include <string_view>

namespace superflag {

using Rational = mpq_class;

/// Exact element of Q(i, sqrt2), stored as a + b*i + c*r2 + d*i*r2 with
/// rational coordinates. Every constant the osp/flag constructions need
/// (rationals, i, 1/sqrt2) lives here, so nothing is ever rounded.
class FieldScalar {
 public:
  FieldScalar() = default;
  FieldScalar(long value) : coords_{Rational(value), 0, 0, 0} {}  // NOLINT
  FieldScalar(Rational value) : coords_{std::move(value), 0, 0, 0} { coords_[0].canonicalize(); }  // NOLINT
  FieldScalar(Rational a, Rational b, Rational c, Rational d)
      : coords_{std::move(a), std::move(b), std::move(c), std::move(d)} {
    for (auto& q : coords_) q.canonicalize();
  }

  static FieldScalar i() { return {0, 1, 0, 0}; }
  static FieldScalar sqrt2() { return {0, 0, 1, 0}; }

  const Rational& rational_part() const { return coords_[0]; }
  const Rational& i_part() const { return coords_[1]; }
  const Rational& r2_part() const { return coords_[2]; }
  const Rational& i_r2_part() const { return coords_[3]; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;

  FieldScalar operator-() const;
  FieldScalar& operator+=(const FieldScalar& other);
  FieldScalar& operator-=(const FieldScalar& other);
  FieldScalar& operator*=(const FieldScalar& other);
  FieldScalar& operator/=(const FieldScalar& other);

  friend FieldScalar operator+(FieldScalar x, const FieldScalar& y) { return x += y; }
  friend FieldScalar operator-(FieldScalar x, const FieldScalar& y) { return x -= y; }
  friend FieldScalar operator*(const FieldScalar& x, const FieldScalar& y);
  friend FieldScalar operator/(FieldScalar x, const FieldScalar& y) { return x /= y; }
  friend bool operator==(const FieldScalar& x, const FieldScalar& y) {
    return x.coords_ == y.coords_;
  }

  /// Throws std::domain_error on zero.
  FieldScalar inverse() const;

  /// Complex conjugate (i -> -i).
  FieldScalar conj() const;

  /// Renders "a + b*i + c*r2 + d*i*r2", dropping zero coordinates.
  std::string to_string() const;

  /// Parses the same format. Products and parenthesised groups are accepted,
  /// e.g. "(1 + i)*r2/2". Throws std::invalid_argument on malformed text.
  static FieldScalar parse(std::string_view text);

 private:
  std::array<Rational, 4> coords_{};
};

std::ostream& operator<<(std::ostream& os, const FieldScalar& x);

FieldScalar add(const FieldScalar& x, const FieldScalar& y);
FieldScalar mul(const FieldScalar& x, const FieldScalar& y);
FieldScalar inv(const FieldScalar& x);

}  // namespace superflag
