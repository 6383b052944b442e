#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "equidim/polynomial.hpp"

namespace equidim {

/// Reduced Groebner basis: monic, inter-reduced, generators sorted by
/// descending leading monomial. Two bases of the same ring compare equal
/// exactly when they generate the same ideal. The unit ideal is {1}; the zero
/// ideal has no generators.
class GroebnerBasis {
 public:
  GroebnerBasis() = default;
  explicit GroebnerBasis(RingPtr ring) : ring_(std::move(ring)) {}

  static GroebnerBasis unit(RingPtr ring);
  /// Wraps generators that already form a reduced basis (only sorts them).
  static GroebnerBasis from_reduced(RingPtr ring, std::vector<Polynomial> generators);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  bool is_unit_ideal() const { return unit_; }
  bool is_zero_ideal() const { return gens_.empty(); }

  friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b);

 private:
  RingPtr ring_;
  std::vector<Polynomial> gens_;
  bool unit_ = false;
};

/// Remainder of full reduction of f by the basis.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis);

/// Reduced basis of <F> under the order of `ring`. Inputs are moved into
/// `ring` first (they must share its field and variable count).
GroebnerBasis buchberger(const RingPtr& ring, std::span<const Polynomial> generators);

/// True iff <F> = <1>. Stops as soon as a nonzero constant appears.
bool generates_unit_ideal(const RingPtr& ring, std::span<const Polynomial> generators);

/// Reduced grevlex basis of <F> : g^oo, by eliminating t from <F, t*g - 1>.
/// Saturating by a nonzero constant returns the basis of <F>.
GroebnerBasis saturate(const RingPtr& ring, std::span<const Polynomial> generators, const Polynomial& g);

/// Successive saturation by each factor; constant factors are skipped.
GroebnerBasis saturate_by_factors(const RingPtr& ring, std::span<const Polynomial> generators,
                                  std::span<const Polynomial> factors);

bool ideal_member(const Polynomial& f, const GroebnerBasis& basis);

/// f vanishes on V(<F>): decided by whether <F, t*f - 1> is the unit ideal.
bool radical_member(const Polynomial& f, std::span<const Polynomial> generators);
bool radical_member(const Polynomial& f, const GroebnerBasis& basis);

/// <G1> n <G2> via elimination of t from <t*G1, (1-t)*G2>.
GroebnerBasis ideal_intersect(const GroebnerBasis& a, const GroebnerBasis& b);

/// Krull dimension of R/<G>: n minus the size of a smallest variable set
/// meeting the support of every leading monomial. Throws on the unit ideal.
int dimension(const GroebnerBasis& basis);

/// Number of standard monomials of a zero-dimensional ideal.
std::uint64_t quotient_degree(const GroebnerBasis& basis);

/// Checks every S-polynomial of the generators reduces to zero.
bool satisfies_buchberger_criterion(const GroebnerBasis& basis);

/// Running totals, for profiling the kernel from tests and the CLI.
struct GroebnerStats {
  std::uint64_t bases = 0;
  std::uint64_t pairs_reduced = 0;
  std::uint64_t zero_reductions = 0;
  std::uint64_t reduction_steps = 0;
};
GroebnerStats& groebner_stats();

/// Time budget for Groebner work on the calling thread. While a scope is
/// alive, Buchberger runs throw CostGuardExceeded once the deadline passes.
/// Scopes nest; the earliest deadline wins.
class DeadlineScope {
 public:
  explicit DeadlineScope(std::chrono::steady_clock::duration budget);
  ~DeadlineScope();
  DeadlineScope(const DeadlineScope&) = delete;
  DeadlineScope& operator=(const DeadlineScope&) = delete;

 private:
  std::optional<std::chrono::steady_clock::time_point> previous_;
};

}  // namespace equidim
