#include "equidim/decomp.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>

namespace equidim {

const char* to_string(InputOrder o) {
  switch (o) {
    case InputOrder::by_degree: return "degree";
    case InputOrder::by_support: return "support";
    case InputOrder::as_is: return "asis";
  }
  return "?";
}

std::vector<std::size_t> order_input(std::span<const Polynomial> F, InputOrder strategy) {
  std::vector<std::size_t> perm(F.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  if (strategy == InputOrder::by_degree)
    std::stable_sort(perm.begin(), perm.end(),
                     [&](std::size_t a, std::size_t b) { return F[a].total_degree() < F[b].total_degree(); });
  else if (strategy == InputOrder::by_support)
    std::stable_sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) { return F[a].size() < F[b].size(); });
  return perm;
}

Decomposer::Decomposer(const DecompConfig& config) : config_(config), rng_(config.seed) {}

AffineCell Decomposer::full_space(const RingPtr& ring) { return cell_full_space(ring, config_.backend, rng_); }

void Decomposer::check_depth(int depth) const {
  if (depth > config_.max_depth)
    throw CostGuardExceeded("decomposition recursion deeper than " + std::to_string(config_.max_depth));
}

namespace {

void append(std::vector<AffineCell>& out, std::vector<AffineCell>&& more) {
  for (auto& c : more)
    if (!c.empty) out.push_back(std::move(c));
}

// Candidates ranked by (total degree, number of terms, position).
std::optional<Polynomial> pick_outside_radical(const AffineCell& X, std::span<const Polynomial> candidates) {
  std::vector<std::size_t> idx(candidates.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    const Polynomial& p = candidates[a];
    const Polynomial& q = candidates[b];
    if (p.total_degree() != q.total_degree()) return p.total_degree() < q.total_degree();
    return p.size() < q.size();
  });
  for (std::size_t k : idx)
    if (!cell_rad_member(X, candidates[k])) return candidates[k];
  return std::nullopt;
}

}  // namespace

void Decomposer::proper_branch(const AffineCell& X, const Polynomial& f, std::vector<AffineCell>& out) {
  // a zero-dimensional witness cell meets V(f) properly only by missing it
  if (X.backend == Backend::witness && X.d == 0) return;
  AffineCell Y = intersect_proper(X, f, rng_);
  if (config_.observer.on_proper) config_.observer.on_proper(X, f, Y);
  if (!Y.empty) out.push_back(std::move(Y));
}

std::vector<AffineCell> Decomposer::split(const AffineCell& X, const Polynomial& f) { return split(X, f, {}, 0); }

std::vector<AffineCell> Decomposer::split(const AffineCell& X, const Polynomial& f, const Cache& cache, int depth) {
  check_depth(depth);
  std::vector<AffineCell> out;
  if (X.empty) return out;
  const Polynomial fr = f.in_ring(X.ring);
  if (fr.is_zero()) {
    out.push_back(X);
    return out;
  }
  if (fr.is_nonzero_constant()) return out;

  std::optional<GroebnerBasis> sat_f;
  bool proper;
  if (X.backend == Backend::gb) {
    const GroebnerBasis& I = cell_basis(X);
    sat_f = saturate(X.ring, I.generators(), fr);
    proper = is_proper_given_saturation(I, *sat_f);
  } else {
    proper = is_proper(X, fr);
  }
  if (proper) {
    proper_branch(X, fr, out);
    return out;
  }

  Cache local = cache;
  std::optional<Polynomial> g = pick_outside_radical(X, cache);
  if (!g) {
    if (!sat_f) sat_f = saturate(X.ring, cell_basis(X).generators(), fr);
    const auto& gens = sat_f->generators();
    local.insert(local.end(), gens.begin(), gens.end());
    g = pick_outside_radical(X, gens);
  }
  if (!g) {
    // every element of sat(I(X), f) vanishes on X: the intersection is proper
    // after all (the witness test answered wrongly)
    proper_branch(X, fr, out);
    return out;
  }

  std::vector<Polynomial> H = saturate(X.ring, cell_basis(X).generators(), *g).generators();
  AffineCell top = intersect_components(X, H);
  if (!top.empty) out.push_back(std::move(top));

  std::vector<Polynomial> gs{*g};
  AffineCell rest = intersect_components(X, gs);
  if (config_.observer.on_improper) config_.observer.on_improper(X, *g, rest);
  if (rest.empty) return out;
  for (const AffineCell& Y : pieces(rest, H, depth + 1)) append(out, split(Y, fr, local, depth + 1));
  return out;
}

std::vector<AffineCell> Decomposer::pieces(const AffineCell& X, std::span<const Polynomial> H, int depth) {
  return config_.classic_remove ? remove(X, H, depth) : remove_prime(X, H, depth);
}

std::vector<AffineCell> Decomposer::remove(const AffineCell& X, std::span<const Polynomial> H) {
  return remove(X, H, 0);
}

std::vector<AffineCell> Decomposer::remove(const AffineCell& X, std::span<const Polynomial> H, int depth) {
  check_depth(depth);
  std::vector<AffineCell> out;
  if (H.empty() || X.empty) return out;
  const Polynomial& h = H.front();
  AffineCell first = subtract_hypersurface(X, h);
  if (!first.empty) out.push_back(std::move(first));
  for (const AffineCell& Y : remove(X, H.subspan(1), depth + 1)) append(out, split(Y, h, {}, depth + 1));
  return out;
}

std::vector<AffineCell> Decomposer::remove_prime(const AffineCell& X, std::span<const Polynomial> H) {
  return remove_prime(X, H, 0);
}

std::vector<AffineCell> Decomposer::remove_prime(const AffineCell& X, std::span<const Polynomial> H, int depth) {
  check_depth(depth);
  std::vector<AffineCell> out;
  if (X.empty) return out;
  for (std::size_t i = 0; i < H.size(); ++i) {
    AffineCell Xi = subtract_hypersurface(X, H[i]);
    std::vector<Polynomial> Hi;
    for (std::size_t j = 0; j < i && !Xi.empty; ++j) {
      if (!is_proper(Xi, H[j])) {
        Hi.push_back(H[j]);
        continue;
      }
      std::vector<AffineCell> cut;
      proper_branch(Xi, H[j].in_ring(Xi.ring), cut);
      if (cut.empty())
        Xi.empty = true;
      else
        Xi = std::move(cut.front());
    }
    if (Xi.empty) continue;
    std::vector<AffineCell> D{std::move(Xi)};
    for (const auto& h : Hi) {
      std::vector<AffineCell> next;
      for (const AffineCell& Y : D) append(next, split(Y, h, {}, depth + 1));
      D = std::move(next);
    }
    append(out, std::move(D));
  }
  return out;
}

DecompositionOutput equidim(const RingPtr& ring, std::span<const Polynomial> F, const DecompConfig& config) {
  Decomposer dec(config);
  DecompositionOutput result;
  result.seed = config.seed;
  result.backend = config.backend;
  result.input_order_used = order_input(F, config.order);

  std::vector<AffineCell> D;
  AffineCell start = dec.full_space(ring);
  if (!start.empty) D.push_back(std::move(start));
  for (std::size_t k : result.input_order_used) {
    std::vector<AffineCell> next;
    for (const AffineCell& X : D) append(next, dec.split(X, F[k]));
    D = std::move(next);
  }
  for (auto& X : D) {
    auto [dim, deg] = cell_dim_degree(X, dec.rng());
    result.cells.push_back({std::move(X), dim, deg});
  }
  return result;
}

}  // namespace equidim
