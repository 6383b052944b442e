#include "equidim/field.hpp"

#include <string>

namespace equidim {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

Field::Field(std::uint32_t p) : p_(p) {
  if (p < 3 || p >= (1u << 31) || !is_prime(p))
    throw ContractViolation("field characteristic must be an odd prime below 2^31, got " +
                            std::to_string(p));
}

std::uint32_t Field::inv(std::uint32_t a) const {
  if (a % p_ == 0) throw DivisionByZero("inverse of zero in GF(" + std::to_string(p_) + ")");
  // extended Euclid on (a, p)
  std::int64_t r0 = p_, r1 = a % p_;
  std::int64_t s0 = 0, s1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t r2 = r0 - q * r1;
    r0 = r1;
    r1 = r2;
    std::int64_t s2 = s0 - q * s1;
    s0 = s1;
    s1 = s2;
  }
  return reduce(s0);
}

std::uint32_t Field::pow(std::uint32_t a, std::uint64_t e) const {
  std::uint32_t result = 1 % p_;
  std::uint32_t base = a % p_;
  while (e) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

void FieldElement::check_same_field(const FieldElement& o) const {
  if (!(*field_ == *o.field_))
    throw ContractViolation("field elements from different fields: GF(" +
                            std::to_string(field_->prime()) + ") vs GF(" +
                            std::to_string(o.field_->prime()) + ")");
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  check_same_field(o);
  return FieldElement(*field_, field_->add(value_, o.value_));
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  check_same_field(o);
  return FieldElement(*field_, field_->sub(value_, o.value_));
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  check_same_field(o);
  return FieldElement(*field_, field_->mul(value_, o.value_));
}

FieldElement FieldElement::operator-() const { return FieldElement(*field_, field_->neg(value_)); }

FieldElement FieldElement::inverse() const { return FieldElement(*field_, field_->inv(value_)); }

}  // namespace equidim
