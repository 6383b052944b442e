#pragma once

#include <cstdint>
#include <ostream>

#include "equidim/errors.hpp"

namespace equidim {

/// Prime field GF(p) for an odd prime p < 2^31.
///
/// The field object is the shared context for raw residues; hot loops in the
/// Groebner engine work on `std::uint32_t` values directly through it.
class Field {
 public:
  static constexpr std::uint32_t kDefaultPrime = 65521;

  explicit Field(std::uint32_t p = kDefaultPrime);

  std::uint32_t prime() const { return p_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
    return a >= b ? a - b : a + p_ - b;
  }
  std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p_);
  }
  std::uint32_t inv(std::uint32_t a) const;
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;

  /// Reduces any signed integer into [0, p).
  std::uint32_t reduce(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<std::uint32_t>(r < 0 ? r + p_ : r);
  }

  friend bool operator==(const Field& a, const Field& b) { return a.p_ == b.p_; }

 private:
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n);

/// A residue tagged with the field it lives in. Mixing fields is a contract
/// violation rather than silent garbage.
class FieldElement {
 public:
  FieldElement(const Field& field, std::int64_t value)
      : field_(&field), value_(field.reduce(value)) {}

  std::uint32_t value() const { return value_; }
  const Field& field() const { return *field_; }
  bool is_zero() const { return value_ == 0; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement inverse() const;

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return *a.field_ == *b.field_ && a.value_ == b.value_;
  }
  friend std::ostream& operator<<(std::ostream& os, const FieldElement& a) {
    return os << a.value_;
  }

 private:
  void check_same_field(const FieldElement& o) const;

  const Field* field_;
  std::uint32_t value_;
};

}  // namespace equidim
