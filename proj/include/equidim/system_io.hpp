#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "equidim/polynomial.hpp"

namespace equidim {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// A polynomial system over GF(p).
///
/// Text form: a `vars x, y, z` line, an optional `char 65521` line, then one
/// polynomial per line built from `+ - * ^`, parentheses, identifiers and
/// integer literals. `#` starts a comment; blank lines are ignored.
struct SystemFile {
  std::vector<std::string> variables;
  std::uint32_t characteristic = Field::kDefaultPrime;
  std::vector<std::string> sources;
  RingPtr ring;
  std::vector<Polynomial> polynomials;
};

/// `characteristic_override` (nonzero) replaces the file's `char` line.
SystemFile parse_system(std::string_view text, std::uint32_t characteristic_override = 0);

/// Parses one polynomial over `ring` (column numbers in errors are 1-based).
Polynomial parse_polynomial(std::string_view text, const RingPtr& ring, std::size_t line = 1);

std::string format_system(const SystemFile& system);

SystemFile make_system(const RingPtr& ring, std::vector<Polynomial> polynomials);

/// 2n-2 quadrics in 2(n-2)+2 variables x*, y*, z1, z2: random dense f_i over
/// the x block and z, and g_i the same polynomial with x renamed to y.
SystemFile gen_ps(int n, Rng& rng, std::uint32_t prime = Field::kDefaultPrime);

/// f = g_1^2 + ... + g_s^2 for random dense quadrics g_i in n variables,
/// followed by df/dx2, ..., df/dxn.
SystemFile gen_sos(int s, int n, Rng& rng, std::uint32_t prime = Field::kDefaultPrime);

}  // namespace equidim
