#include "equidim/verify.hpp"

#include <bit>

namespace equidim {

PointSet enumerate_points(const RingPtr& ring, std::span<const Polynomial> F, std::span<const Polynomial> G) {
  const std::uint32_t p = ring->field.prime();
  const std::size_t n = ring->nvars();
  if (p > 11 || n > 4)
    throw CostGuardExceeded("point enumeration needs p <= 11 and n <= 4 (got p=" + std::to_string(p) +
                            ", n=" + std::to_string(n) + ")");
  std::vector<Polynomial> fs, gs;
  for (const auto& f : F) fs.push_back(f.in_ring(ring));
  for (const auto& g : G) gs.push_back(g.in_ring(ring));
  PointSet out;
  Point a(n, 0);
  for (;;) {
    bool keep = true;
    for (const auto& f : fs)
      if (f.evaluate(a) != 0) {
        keep = false;
        break;
      }
    for (std::size_t k = 0; keep && k < gs.size(); ++k)
      if (gs[k].evaluate(a) == 0) keep = false;
    if (keep) out.insert(a);
    std::size_t i = 0;
    while (i < n && ++a[i] == p) a[i++] = 0;
    if (i == n) break;
  }
  return out;
}

PointSet cell_points(const AffineCell& X) { return enumerate_points(X.ring, X.F, X.G); }

FacetDecomposition monomial_facets_oracle(const RingPtr& ring, std::span<const Polynomial> F) {
  const std::size_t n = ring->nvars();
  if (n > 12) throw CostGuardExceeded("monomial oracle limited to 12 variables");
  std::vector<std::uint32_t> supports;
  for (const auto& f : F) {
    if (f.is_zero()) continue;
    if (!f.is_monomial()) throw ContractViolation("monomial oracle needs monomial generators, got " + to_string(f));
    const Monomial& m = f.leading_monomial();
    if (m.degree() != static_cast<unsigned>(std::popcount(m.support())))
      throw ContractViolation("monomial oracle needs squarefree generators, got " + to_string(f));
    supports.push_back(m.support());
  }
  std::vector<std::uint32_t> covers;
  for (std::uint32_t S = 0; S < (1u << n); ++S) {
    bool hits = true;
    for (std::uint32_t sup : supports)
      if (!(sup & S)) {
        hits = false;
        break;
      }
    if (hits) covers.push_back(S);
  }
  FacetDecomposition out;
  for (std::uint32_t S : covers) {
    bool minimal = true;
    for (std::uint32_t T : covers)
      if (T != S && (T & S) == T) {
        minimal = false;
        break;
      }
    if (minimal) out[static_cast<int>(n) - std::popcount(S)].push_back(S);
  }
  return out;
}

PartitionReport check_partition(std::span<const AffineCell> cells, const RingPtr& ring,
                                std::span<const Polynomial> F, bool with_points) {
  PartitionReport r;
  RingPtr base = with_order(ring, MonomialOrder::grevlex());
  for (std::size_t i = 0; i < cells.size(); ++i) {
    for (std::size_t j = i + 1; j < cells.size(); ++j) {
      std::vector<Polynomial> gens, factors;
      for (const auto* c : {&cells[i], &cells[j]}) {
        for (const auto& f : cell_basis(*c).generators()) gens.push_back(f.in_ring(base));
        for (const auto& g : c->G) factors.push_back(g.in_ring(base));
      }
      if (!saturate_by_factors(base, gens, factors).is_unit_ideal()) {
        r.disjoint = false;
        r.overlapping.emplace_back(i, j);
      }
    }
  }
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const GroebnerBasis& I = cell_basis(cells[i]);
    for (std::size_t k = 0; k < F.size(); ++k) {
      if (!radical_member(F[k].in_ring(I.ring()), I)) {
        r.inputs_vanish = false;
        r.nonvanishing.emplace_back(i, k);
      }
    }
  }
  if (with_points && ring->field.prime() <= 11 && ring->nvars() <= 4) {
    PointSet expected = enumerate_points(base, F, {});
    std::map<Point, int> hits;
    for (const auto& c : cells)
      for (const auto& a : cell_points(c)) ++hits[a];
    bool ok = hits.size() == expected.size();
    for (const auto& [a, count] : hits)
      if (count != 1 || !expected.count(a)) ok = false;
    r.points_match = ok;
    r.points_expected = expected.size();
    r.points_covered = hits.size();
  }
  return r;
}

TopDimensionReport check_top_dimension(const AffineCell& X, int claimed, Rng& rng) {
  TopDimensionReport r;
  r.claimed = claimed;
  if (claimed < 0) return r;
  Witness cut = make_witness(X.ring, X.F, X.G, claimed, rng);
  r.cut_nonempty = !cut.basis.is_unit_ideal();
  r.cut_zero_dimensional = r.cut_nonempty && dimension(cut.basis) == 0;
  Witness over = make_witness(X.ring, X.F, X.G, claimed + 1, rng);
  r.overcut_empty = over.basis.is_unit_ideal();
  return r;
}

nlohmann::ordered_json to_json(const PartitionReport& r) {
  nlohmann::ordered_json j;
  j["passed"] = r.passed();
  j["disjoint"] = r.disjoint;
  j["overlapping_pairs"] = r.overlapping;
  j["inputs_vanish"] = r.inputs_vanish;
  j["nonvanishing"] = r.nonvanishing;
  if (r.points_match) {
    j["points_match"] = *r.points_match;
    j["points_expected"] = r.points_expected;
    j["points_covered"] = r.points_covered;
  } else {
    j["points_match"] = nullptr;
  }
  return j;
}

nlohmann::ordered_json to_json(const TopDimensionReport& r) {
  nlohmann::ordered_json j;
  j["claimed"] = r.claimed;
  j["passed"] = r.passed();
  j["cut_nonempty"] = r.cut_nonempty;
  j["cut_zero_dimensional"] = r.cut_zero_dimensional;
  j["overcut_empty"] = r.overcut_empty;
  return j;
}

}  // namespace equidim
