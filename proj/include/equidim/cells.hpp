#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "equidim/groebner.hpp"

namespace equidim {

enum class Backend { gb, witness };

const char* to_string(Backend b);

namespace detail {

// Lazily computed I(X). A cell built from a parent by adding equations
// and/or inequation factors remembers the parent's memo, so that once the
// parent basis is known the child's can start from it.
struct BasisMemo {
  std::mutex mutex;
  std::optional<GroebnerBasis> basis;
  std::shared_ptr<BasisMemo> parent;
  std::vector<Polynomial> added_equations;
  std::vector<Polynomial> added_factors;
};

}  // namespace detail

/// Locally closed set V(F) \ V(prod G).
///
/// gb backend: F is the reduced grevlex basis of I(X).
/// witness backend: F is a plain generator list and W is the reduced basis
/// of I(X n L) for the affine subspace L cut out by `witness_forms`
/// (d random affine forms, d = dim X).
struct AffineCell {
  Backend backend = Backend::gb;
  RingPtr ring;
  std::vector<Polynomial> F;
  std::vector<Polynomial> G;
  GroebnerBasis W;
  int d = 0;
  std::vector<Polynomial> witness_forms;
  bool empty = false;
  std::shared_ptr<detail::BasisMemo> memo;
};

AffineCell cell_full_space(const RingPtr& ring, Backend backend, Rng& rng);

/// Gb cell V(F; G) with I(X) computed by saturating <F> by each factor.
AffineCell make_gb_cell(const RingPtr& ring, std::span<const Polynomial> F, std::span<const Polynomial> G);

/// X n V(f), for f known to meet X properly.
AffineCell intersect_proper(const AffineCell& X, const Polynomial& f, Rng& rng);

/// X n V(H), for H cutting out a union of components of X.
AffineCell intersect_components(const AffineCell& X, std::span<const Polynomial> H);

AffineCell subtract_hypersurface(const AffineCell& X, const Polynomial& f);

/// f vanishes on X.
bool cell_rad_member(const AffineCell& X, const Polynomial& f);

/// Reduced grevlex basis of I(X), computed once per cell.
const GroebnerBasis& cell_basis(const AffineCell& X);

struct Witness {
  GroebnerBasis basis;
  std::vector<Polynomial> forms;
};

/// Basis of (<F u J> : g1^oo : ... : gr^oo) for d fresh random affine forms J.
Witness make_witness(const RingPtr& ring, std::span<const Polynomial> F, std::span<const Polynomial> G, int d,
                     Rng& rng);

/// X n V(f) is empty or of dimension dim X - 1.
bool is_proper(const AffineCell& X, const Polynomial& f);

/// Same test for the gb backend, given sat(I(X), f) already computed.
bool is_proper_given_saturation(const GroebnerBasis& ideal, const GroebnerBasis& saturation);

bool is_empty(const AffineCell& X);

/// (dimension, degree). The gb backend draws a fresh witness for the degree.
std::pair<int, std::uint64_t> cell_dim_degree(const AffineCell& X, Rng& rng);

}  // namespace equidim
