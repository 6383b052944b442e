#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "equidim/cells.hpp"

namespace equidim {

using Point = std::vector<std::uint32_t>;
using PointSet = std::set<Point>;

/// All a in GF(p)^n with f(a) = 0 for f in F and g(a) != 0 for g in G.
/// Refuses (CostGuardExceeded) unless p <= 11 and n <= 4.
PointSet enumerate_points(const RingPtr& ring, std::span<const Polynomial> F, std::span<const Polynomial> G);

PointSet cell_points(const AffineCell& X);

/// Minimal primes <x_i : i in S> of a squarefree monomial ideal, keyed by
/// dimension n - |S|. Each component is a bitmask of S.
using FacetDecomposition = std::map<int, std::vector<std::uint32_t>>;
FacetDecomposition monomial_facets_oracle(const RingPtr& ring, std::span<const Polynomial> F);

struct PartitionReport {
  bool disjoint = true;
  std::vector<std::pair<std::size_t, std::size_t>> overlapping;
  bool inputs_vanish = true;
  std::vector<std::pair<std::size_t, std::size_t>> nonvanishing;  // (cell, input)
  std::optional<bool> points_match;  // empty when the cost guard refused
  std::size_t points_expected = 0;
  std::size_t points_covered = 0;

  bool passed() const { return disjoint && inputs_vanish && points_match.value_or(true); }
};

PartitionReport check_partition(std::span<const AffineCell> cells, const RingPtr& ring,
                                std::span<const Polynomial> F, bool with_points = true);

struct TopDimensionReport {
  int claimed = 0;
  bool cut_nonempty = false;       // d forms leave a nonempty zero-dimensional set
  bool cut_zero_dimensional = false;
  bool overcut_empty = false;      // d+1 forms leave nothing
  bool passed() const { return cut_nonempty && cut_zero_dimensional && overcut_empty; }
};

TopDimensionReport check_top_dimension(const AffineCell& X, int claimed, Rng& rng);

nlohmann::ordered_json to_json(const PartitionReport& r);
nlohmann::ordered_json to_json(const TopDimensionReport& r);

}  // namespace equidim
