#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "equidim/cells.hpp"

namespace equidim {

enum class InputOrder { by_degree, by_support, as_is };

const char* to_string(InputOrder o);

/// Stable permutation of the input (indices into F) under the strategy.
std::vector<std::size_t> order_input(std::span<const Polynomial> F, InputOrder strategy);

/// Hooks fired on the two kinds of intersection taken by split.
struct DecompObserver {
  // X n V(f) computed as a proper intersection; `result` may be empty.
  std::function<void(const AffineCell& X, const Polynomial& f, const AffineCell& result)> on_proper;
  // X n V(g) computed for g outside rad I(X).
  std::function<void(const AffineCell& X, const Polynomial& g, const AffineCell& result)> on_improper;
};

struct DecompConfig {
  Backend backend = Backend::witness;
  InputOrder order = InputOrder::by_degree;
  std::uint64_t seed = 1;
  bool classic_remove = false;
  // split/remove nesting beyond this aborts with CostGuardExceeded; only a
  // run of unlucky witness answers gets near it
  int max_depth = 400;
  DecompObserver observer;
};

struct AnnotatedCell {
  AffineCell cell;
  int dimension = 0;
  std::uint64_t degree = 0;
};

struct DecompositionOutput {
  std::vector<AnnotatedCell> cells;
  std::vector<std::size_t> input_order_used;
  std::uint64_t seed = 0;
  Backend backend = Backend::witness;
};

class Decomposer {
 public:
  explicit Decomposer(const DecompConfig& config);

  /// Partition of X n V(f) into equidimensional cells.
  std::vector<AffineCell> split(const AffineCell& X, const Polynomial& f);
  /// Partition of X \ V(H) by the original recursion.
  std::vector<AffineCell> remove(const AffineCell& X, std::span<const Polynomial> H);
  /// Partition of X \ V(H) building disjoint pieces eagerly.
  std::vector<AffineCell> remove_prime(const AffineCell& X, std::span<const Polynomial> H);

  AffineCell full_space(const RingPtr& ring);
  Rng& rng() { return rng_; }

 private:
  using Cache = std::vector<Polynomial>;

  std::vector<AffineCell> split(const AffineCell& X, const Polynomial& f, const Cache& cache, int depth);
  std::vector<AffineCell> remove(const AffineCell& X, std::span<const Polynomial> H, int depth);
  std::vector<AffineCell> remove_prime(const AffineCell& X, std::span<const Polynomial> H, int depth);
  std::vector<AffineCell> pieces(const AffineCell& X, std::span<const Polynomial> H, int depth);
  void proper_branch(const AffineCell& X, const Polynomial& f, std::vector<AffineCell>& out);
  void check_depth(int depth) const;

  DecompConfig config_;
  Rng rng_;
};

/// Equidimensional decomposition of V(F) in `ring`.
DecompositionOutput equidim(const RingPtr& ring, std::span<const Polynomial> F, const DecompConfig& config);

}  // namespace equidim
