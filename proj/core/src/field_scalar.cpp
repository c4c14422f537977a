#include "superflag/field_scalar.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

#include "superflag/detail/expr_parser.hpp"

namespace superflag {

bool FieldScalar::is_zero() const {
  for (const auto& q : coords_)
    if (sgn(q) != 0) return false;
  return true;
}

bool FieldScalar::is_one() const { return coords_[0] == 1 && is_rational(); }

bool FieldScalar::is_rational() const {
  return sgn(coords_[1]) == 0 && sgn(coords_[2]) == 0 && sgn(coords_[3]) == 0;
}

FieldScalar FieldScalar::operator-() const {
  FieldScalar out;
  for (int k = 0; k < 4; ++k) out.coords_[k] = -coords_[k];
  return out;
}

FieldScalar& FieldScalar::operator+=(const FieldScalar& other) {
  for (int k = 0; k < 4; ++k)
    if (sgn(other.coords_[k]) != 0) coords_[k] += other.coords_[k];
  return *this;
}

FieldScalar& FieldScalar::operator-=(const FieldScalar& other) {
  for (int k = 0; k < 4; ++k)
    if (sgn(other.coords_[k]) != 0) coords_[k] -= other.coords_[k];
  return *this;
}

FieldScalar operator*(const FieldScalar& x, const FieldScalar& y) {
  if (x.is_rational()) {
    FieldScalar out = y;
    if (x.coords_[0] == 1) return out;
    for (auto& q : out.coords_)
      if (sgn(q) != 0) q *= x.coords_[0];
    return out;
  }
  if (y.is_rational()) return y * x;
  // i*i = -1, r2*r2 = 2, i*(i r2) = -r2, r2*(i r2) = 2i, (i r2)^2 = -2
  const auto& [a, b, c, d] = x.coords_;
  const auto& [e, f, g, h] = y.coords_;
  FieldScalar out;
  out.coords_[0] = a * e - b * f + 2 * c * g - 2 * d * h;
  out.coords_[1] = a * f + b * e + 2 * c * h + 2 * d * g;
  out.coords_[2] = a * g + c * e - b * h - d * f;
  out.coords_[3] = a * h + d * e + b * g + c * f;
  return out;
}

FieldScalar& FieldScalar::operator*=(const FieldScalar& other) { return *this = *this * other; }

FieldScalar& FieldScalar::operator/=(const FieldScalar& other) { return *this = *this * other.inverse(); }

FieldScalar FieldScalar::conj() const { return {coords_[0], -coords_[1], coords_[2], -coords_[3]}; }

FieldScalar FieldScalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero in Q(i, sqrt2)");
  if (is_rational()) return FieldScalar(Rational(1) / coords_[0]);
  // x = u + v*r2 with u, v in Q(i); x * (u - v*r2) = u^2 - 2 v^2 lies in Q(i).
  const FieldScalar r2_conjugate{coords_[0], coords_[1], -coords_[2], -coords_[3]};
  const FieldScalar w = *this * r2_conjugate;
  const Rational norm = w.coords_[0] * w.coords_[0] + w.coords_[1] * w.coords_[1];
  const FieldScalar w_inv{w.coords_[0] / norm, -w.coords_[1] / norm, 0, 0};
  return r2_conjugate * w_inv;
}

namespace {

void append_component(std::ostringstream& os, bool& first, const Rational& q, const char* unit) {
  if (sgn(q) == 0) return;
  Rational mag = abs(q);
  if (first) {
    if (sgn(q) < 0) os << '-';
  } else {
    os << (sgn(q) < 0 ? " - " : " + ");
  }
  first = false;
  if (*unit == '\0') {
    os << mag.get_str();
  } else if (mag == 1) {
    os << unit;
  } else {
    os << mag.get_str() << '*' << unit;
  }
}

}  // namespace

std::string FieldScalar::to_string() const {
  std::ostringstream os;
  bool first = true;
  append_component(os, first, coords_[0], "");
  append_component(os, first, coords_[1], "i");
  append_component(os, first, coords_[2], "r2");
  append_component(os, first, coords_[3], "i*r2");
  if (first) return "0";
  return os.str();
}

FieldScalar FieldScalar::parse(std::string_view text) {
  detail::ExprParser<FieldScalar>::Hooks hooks{
      [](const Rational& q) { return FieldScalar(q); },
      [](const std::string& name) -> FieldScalar {
        if (name == "i") return FieldScalar::i();
        if (name == "r2") return FieldScalar::sqrt2();
        throw std::invalid_argument("unknown symbol '" + name + "' in scalar literal");
      },
      [](const FieldScalar& x, const FieldScalar& y) { return x / y; }};
  return detail::ExprParser<FieldScalar>(text, std::move(hooks)).parse();
}

std::ostream& operator<<(std::ostream& os, const FieldScalar& x) { return os << x.to_string(); }

FieldScalar add(const FieldScalar& x, const FieldScalar& y) { return x + y; }
FieldScalar mul(const FieldScalar& x, const FieldScalar& y) { return x * y; }
FieldScalar inv(const FieldScalar& x) { return x.inverse(); }

}  // namespace superflag
