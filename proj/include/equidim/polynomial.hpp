#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <memory>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "equidim/field.hpp"

namespace equidim {

/// Upper bound on the number of ring variables, auxiliary variables included.
inline constexpr std::size_t kMaxVars = 32;

/// Exponent vector with cached total degree and support bitmask.
/// Exponents are 15-bit; exceeding 32767 in any variable throws.
///
/// 16-bit lanes are packed in reverse variable order (x_n first, most
/// significant lane of word 0), so grevlex ties and divisibility reduce to
/// word ops.
class Monomial {
 public:
  static constexpr unsigned kMaxExponent = 32767;

  Monomial() = default;
  explicit Monomial(std::size_t nvars);
  Monomial(std::size_t nvars, std::span<const unsigned> exponents);

  static Monomial variable(std::size_t nvars, std::size_t index, unsigned power = 1);

  std::size_t nvars() const { return nvars_; }
  unsigned degree() const { return degree_; }
  unsigned operator[](std::size_t i) const { return lane_at(nvars_ - 1 - i); }
  std::uint32_t support() const { return support_; }
  bool is_one() const { return degree_ == 0; }

  void set(std::size_t i, unsigned e);

  bool divides(const Monomial& other) const {
    if (support_ & ~other.support_) return false;
    for (std::size_t w = 0; w < words(); ++w)
      if ((((other.w_[w] | kHigh) - w_[w]) & kHigh) != kHigh) return false;
    return true;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// Exact quotient; requires divisor.divides(*this).
  Monomial operator/(const Monomial& divisor) const;
  static Monomial lcm(const Monomial& a, const Monomial& b);
  static bool coprime(const Monomial& a, const Monomial& b) {
    return (a.support_ & b.support_) == 0;
  }

  /// Same exponents with `extra` zero slots appended.
  Monomial extended(std::size_t extra) const;
  Monomial truncated(std::size_t nvars) const;

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.nvars_ == b.nvars_ && a.w_ == b.w_;
  }

  /// Compares packed exponents from the most significant lane on. Returns 0
  /// when equal, else 1 + the reversed index r (x_{n-1-r}) of the first
  /// difference, negated when a's exponent there is smaller.
  static int first_difference(const Monomial& a, const Monomial& b) {
    for (std::size_t w = 0; w < a.words(); ++w) {
      std::uint64_t x = a.w_[w] ^ b.w_[w];
      if (!x) continue;
      const int lane = std::countl_zero(x) >> 4;
      const int shift = 48 - 16 * lane;
      const int r = static_cast<int>(w) * 4 + lane + 1;
      return ((a.w_[w] >> shift) & 0xffff) < ((b.w_[w] >> shift) & 0xffff) ? -r : r;
    }
    return 0;
  }

  /// Sum of the exponents of the first k reversed slots (the last k variables).
  unsigned leading_block_degree(std::size_t k) const {
    unsigned d = 0;
    for (std::size_t r = 0; r < k; ++r) d += lane_at(r);
    return d;
  }

 private:
  static constexpr std::uint64_t kHigh = 0x8000800080008000ull;
  std::size_t words() const { return (nvars_ + 3u) >> 2; }
  unsigned lane_at(std::size_t r) const { return (w_[r >> 2] >> (48 - 16 * (r & 3))) & 0xffff; }
  void recompute_support();

  std::array<std::uint64_t, kMaxVars / 4> w_{};
  std::uint32_t support_ = 0;
  std::uint32_t degree_ = 0;
  std::uint8_t nvars_ = 0;
};

/// grevlex, or an elimination order whose eliminated block is the LAST
/// `block` variables (ranked above all others, grevlex inside each block).
/// Auxiliary variables are appended at the end, so no re-indexing is needed.
struct MonomialOrder {
  enum class Kind : std::uint8_t { grevlex, elim_block };
  Kind kind = Kind::grevlex;
  std::uint8_t block = 0;

  static MonomialOrder grevlex() { return {}; }
  static MonomialOrder elim_block(std::size_t k) {
    return {Kind::elim_block, static_cast<std::uint8_t>(k)};
  }
  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;
};

/// Three-way comparison: negative, zero or positive as a <, =, > b.
int mono_cmp(const Monomial& a, const Monomial& b, const MonomialOrder& order);

inline int mono_cmp_unchecked(const Monomial& a, const Monomial& b, const MonomialOrder& order) {
  const std::size_t block = order.kind == MonomialOrder::Kind::grevlex ? 0 : order.block;
  if (block) {
    unsigned da = a.leading_block_degree(block), db = b.leading_block_degree(block);
    if (da != db) return da < db ? -1 : 1;
  }
  const int r = Monomial::first_difference(a, b);
  if (r == 0) return 0;
  if (static_cast<std::size_t>(r < 0 ? -r : r) > block && a.degree() != b.degree())
    return a.degree() < b.degree() ? -1 : 1;
  // a smaller exponent in the first differing slot makes a larger
  return r < 0 ? 1 : -1;
}

/// Coefficient field, variable names and monomial order of a polynomial ring.
struct Ring {
  Field field;
  std::vector<std::string> names;
  MonomialOrder order;

  Ring(Field f, std::vector<std::string> variable_names, MonomialOrder ord = MonomialOrder::grevlex());

  std::size_t nvars() const { return names.size(); }
  bool same_as(const Ring& o) const {
    return field == o.field && names == o.names && order == o.order;
  }
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::vector<std::string> names, std::uint32_t prime = Field::kDefaultPrime,
                  MonomialOrder order = MonomialOrder::grevlex());
/// Default variable names x1..xn.
RingPtr make_ring(std::size_t nvars, std::uint32_t prime = Field::kDefaultPrime);

/// `ring` with one more variable (named `name`) under elim_block(1).
RingPtr with_elimination_variable(const RingPtr& ring, const std::string& name = "_t");
/// Same variables and field, different order.
RingPtr with_order(const RingPtr& ring, MonomialOrder order);

struct Term {
  Monomial mono;
  std::uint32_t coef;
  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial: nonzero terms sorted strictly descending under the
/// ring's order. The zero polynomial has no terms.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}
  /// Takes arbitrary terms; sorts, merges duplicates and drops zeros.
  Polynomial(RingPtr ring, std::vector<Term> terms);

  static Polynomial constant(RingPtr ring, std::int64_t c);
  static Polynomial variable(RingPtr ring, std::size_t index);
  static Polynomial monomial(RingPtr ring, Monomial m, std::uint32_t coef = 1);
  /// Trusted constructor: `terms` already canonical (descending, nonzero, unique).
  static Polynomial from_sorted(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || terms_.front().mono.is_one(); }
  bool is_nonzero_constant() const { return !terms_.empty() && terms_.front().mono.is_one(); }
  bool is_monomial() const { return terms_.size() == 1; }
  unsigned total_degree() const;

  /// Maximal term under the ring order; throws on the zero polynomial.
  const Term& leading_term() const;
  const Monomial& leading_monomial() const { return leading_term().mono; }
  std::uint32_t leading_coefficient() const { return leading_term().coef; }

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial scaled(std::uint32_t c) const;
  Polynomial times(const Monomial& m, std::uint32_t c = 1) const;
  Polynomial pow(unsigned e) const;
  /// Divides by the leading coefficient (zero stays zero).
  Polynomial monic() const;

  /// Re-expresses this polynomial in `target`, which must have at least as
  /// many variables; slots beyond ours become zero. When `target` has fewer
  /// variables, every dropped variable must have exponent 0.
  Polynomial in_ring(const RingPtr& target) const;

  /// Evaluation at a point of GF(p)^n (coordinates already reduced).
  std::uint32_t evaluate(std::span<const std::uint32_t> point) const;

  bool uses_variable(std::size_t index) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  void check_ring(const Polynomial& o) const;

  RingPtr ring_;
  std::vector<Term> terms_;
};

/// Term-wise partial derivative with respect to variable `index`; the
/// exponent factor is reduced mod p, so it vanishes when p divides it.
Polynomial derivative(const Polynomial& f, std::size_t index);

/// Human-readable form, e.g. "x^2*y - 3*z + 1". Coefficients above p/2 are
/// shown as negatives.
std::string to_string(const Polynomial& f);

using Rng = std::mt19937_64;

/// `count` affine forms c0 + c1 x1 + ... + cn xn with every coefficient drawn
/// uniformly from GF(p). A draw whose linear part vanishes is redrawn.
std::vector<Polynomial> random_affine_forms(const RingPtr& ring, std::size_t count, Rng& rng);

/// Polynomial with a uniformly random coefficient on every monomial of total
/// degree <= `degree` in the given variables.
Polynomial random_dense_polynomial(const RingPtr& ring, std::span<const std::size_t> variables,
                                   unsigned degree, Rng& rng);

std::uint32_t random_residue(const Field& field, Rng& rng);

}  // namespace equidim
