#include "equidim/cells.hpp"

namespace equidim {

const char* to_string(Backend b) { return b == Backend::gb ? "gb" : "witness"; }

namespace {

using detail::BasisMemo;

std::shared_ptr<BasisMemo> filled_memo(GroebnerBasis basis) {
  auto m = std::make_shared<BasisMemo>();
  m->basis = std::move(basis);
  return m;
}

std::shared_ptr<BasisMemo> child_memo(const AffineCell& parent, std::vector<Polynomial> equations,
                                      std::vector<Polynomial> factors) {
  auto m = std::make_shared<BasisMemo>();
  m->parent = parent.memo;
  m->added_equations = std::move(equations);
  m->added_factors = std::move(factors);
  return m;
}

std::optional<GroebnerBasis> peek(BasisMemo& m) {
  std::lock_guard lock(m.mutex);
  return m.basis;
}

std::vector<Polynomial> concat(std::span<const Polynomial> a, std::span<const Polynomial> b) {
  std::vector<Polynomial> out(a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

// Smallest known generating set of an ideal with the same saturation as F.
std::vector<Polynomial> best_equations(const AffineCell& X) {
  if (auto b = peek(*X.memo)) return b->generators();
  return X.F;
}

AffineCell gb_cell(const RingPtr& ring, std::vector<Polynomial> G, GroebnerBasis basis) {
  AffineCell c;
  c.backend = Backend::gb;
  c.ring = ring;
  c.F = basis.generators();
  c.G = std::move(G);
  c.empty = basis.is_unit_ideal();
  c.memo = filled_memo(std::move(basis));
  return c;
}

GroebnerBasis compute_basis(const AffineCell& X, BasisMemo& memo) {
  // climb to the nearest ancestor whose basis is known
  std::vector<Polynomial> equations = memo.added_equations;
  std::vector<Polynomial> factors = memo.added_factors;
  auto parent_of = [](BasisMemo& m) {
    std::lock_guard lock(m.mutex);
    return m.parent;
  };
  std::shared_ptr<BasisMemo> up = parent_of(memo);
  while (up) {
    if (auto known = peek(*up)) {
      if (!equations.empty()) factors = X.G;
      auto gens = concat(known->generators(), equations);
      return saturate_by_factors(X.ring, gens, factors);
    }
    equations.insert(equations.end(), up->added_equations.begin(), up->added_equations.end());
    factors.insert(factors.end(), up->added_factors.begin(), up->added_factors.end());
    up = parent_of(*up);
  }
  return saturate_by_factors(X.ring, X.F, X.G);
}

}  // namespace

AffineCell cell_full_space(const RingPtr& ring, Backend backend, Rng& rng) {
  RingPtr base = with_order(ring, MonomialOrder::grevlex());
  if (backend == Backend::gb) return gb_cell(base, {}, GroebnerBasis(base));
  AffineCell c;
  c.backend = Backend::witness;
  c.ring = base;
  c.d = static_cast<int>(base->nvars());
  Witness w = make_witness(base, {}, {}, c.d, rng);
  c.W = std::move(w.basis);
  c.witness_forms = std::move(w.forms);
  c.empty = c.W.is_unit_ideal();
  c.memo = filled_memo(GroebnerBasis(base));
  return c;
}

AffineCell make_gb_cell(const RingPtr& ring, std::span<const Polynomial> F, std::span<const Polynomial> G) {
  RingPtr base = with_order(ring, MonomialOrder::grevlex());
  return gb_cell(base, {G.begin(), G.end()}, saturate_by_factors(base, F, G));
}

AffineCell intersect_proper(const AffineCell& X, const Polynomial& f, Rng& rng) {
  const Polynomial fr = f.in_ring(X.ring);
  if (X.backend == Backend::gb) {
    auto gens = cell_basis(X).generators();
    gens.push_back(fr);
    return gb_cell(X.ring, X.G, saturate_by_factors(X.ring, gens, X.G));
  }
  if (X.d == 0) throw ContractViolation("cannot properly intersect a zero-dimensional cell");
  auto gens = best_equations(X);
  gens.push_back(fr);
  Witness w = make_witness(X.ring, gens, X.G, X.d - 1, rng);
  AffineCell c;
  c.backend = Backend::witness;
  c.ring = X.ring;
  c.F = X.F;
  c.F.push_back(fr);
  c.G = X.G;
  c.W = std::move(w.basis);
  c.d = X.d - 1;
  c.witness_forms = std::move(w.forms);
  c.empty = c.W.is_unit_ideal();
  c.memo = child_memo(X, {fr}, {});
  return c;
}

AffineCell intersect_components(const AffineCell& X, std::span<const Polynomial> H) {
  if (H.empty()) return X;
  std::vector<Polynomial> hs;
  for (const auto& h : H) hs.push_back(h.in_ring(X.ring));
  if (X.backend == Backend::gb) {
    auto gens = concat(cell_basis(X).generators(), hs);
    return gb_cell(X.ring, X.G, saturate_by_factors(X.ring, gens, X.G));
  }
  AffineCell c = X;
  c.F.insert(c.F.end(), hs.begin(), hs.end());
  c.W = buchberger(X.ring, concat(X.W.generators(), hs));
  c.empty = c.W.is_unit_ideal();
  c.memo = child_memo(X, std::move(hs), {});
  return c;
}

AffineCell subtract_hypersurface(const AffineCell& X, const Polynomial& f) {
  if (f.is_zero()) throw ContractViolation("cannot remove V(0)");
  const Polynomial fr = f.in_ring(X.ring);
  auto G = X.G;
  G.push_back(fr);
  if (X.backend == Backend::gb) return gb_cell(X.ring, std::move(G), saturate(X.ring, cell_basis(X).generators(), fr));
  AffineCell c = X;
  c.G = std::move(G);
  c.W = saturate(X.ring, X.W.generators(), fr);
  c.empty = c.W.is_unit_ideal();
  c.memo = child_memo(X, {}, {fr});
  return c;
}

bool cell_rad_member(const AffineCell& X, const Polynomial& f) {
  if (X.backend == Backend::witness) return radical_member(f.in_ring(X.ring), X.W);
  return radical_member(f.in_ring(X.ring), cell_basis(X));
}

const GroebnerBasis& cell_basis(const AffineCell& X) {
  BasisMemo& memo = *X.memo;
  {
    std::lock_guard lock(memo.mutex);
    if (memo.basis) return *memo.basis;
  }
  // computed outside the lock; concurrent fills produce the same basis
  GroebnerBasis b = compute_basis(X, memo);
  std::lock_guard lock(memo.mutex);
  if (!memo.basis) {
    memo.basis = std::move(b);
    memo.parent.reset();
  }
  return *memo.basis;
}

Witness make_witness(const RingPtr& ring, std::span<const Polynomial> F, std::span<const Polynomial> G, int d,
                     Rng& rng) {
  if (d < 0) throw ContractViolation("witness codimension must be non-negative");
  Witness w;
  w.forms = random_affine_forms(ring, static_cast<std::size_t>(d), rng);
  w.basis = saturate_by_factors(ring, concat(F, w.forms), G);
  return w;
}

bool is_proper_given_saturation(const GroebnerBasis& ideal, const GroebnerBasis& saturation) {
  if (ideal.is_unit_ideal() || saturation == ideal) return true;
  for (const auto& h : saturation.generators()) {
    if (ideal_member(h, ideal)) continue;
    if (!radical_member(h, ideal)) return false;
  }
  return true;
}

bool is_proper(const AffineCell& X, const Polynomial& f) {
  const Polynomial fr = f.in_ring(X.ring);
  if (X.backend == Backend::witness) {
    if (X.empty) return true;
    auto gens = X.W.generators();
    gens.push_back(fr);
    return generates_unit_ideal(X.ring, gens);
  }
  const GroebnerBasis& I = cell_basis(X);
  if (fr.is_zero()) return I.is_unit_ideal();
  return is_proper_given_saturation(I, saturate(X.ring, I.generators(), fr));
}

bool is_empty(const AffineCell& X) {
  if (X.backend == Backend::witness) return X.W.is_unit_ideal();
  return cell_basis(X).is_unit_ideal();
}

std::pair<int, std::uint64_t> cell_dim_degree(const AffineCell& X, Rng& rng) {
  if (is_empty(X)) throw ContractViolation("empty cell has no dimension");
  // a degenerate witness (likely only over tiny fields) falls back to I(X)
  if (X.backend == Backend::witness && dimension(X.W) == 0) return {X.d, quotient_degree(X.W)};
  const GroebnerBasis& I = cell_basis(X);
  int dim = dimension(I);
  // small fields make degenerate slices likely; draw again
  for (int attempt = 0;; ++attempt) {
    Witness w = make_witness(X.ring, I.generators(), {}, dim, rng);
    if (!w.basis.is_unit_ideal() && dimension(w.basis) == 0) return {dim, quotient_degree(w.basis)};
    if (attempt == 31) throw ContractViolation("no zero-dimensional slice found in 32 draws");
  }
}

}  // namespace equidim
