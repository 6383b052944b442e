#include "equidim/groebner.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <optional>

#include "equidim/errors.hpp"

namespace equidim {

GroebnerStats& groebner_stats() {
  static thread_local GroebnerStats stats;
  return stats;
}

namespace {

thread_local std::optional<std::chrono::steady_clock::time_point> tls_deadline;

void check_deadline() {
  if (tls_deadline && std::chrono::steady_clock::now() > *tls_deadline)
    throw CostGuardExceeded("Groebner time budget exhausted");
}

}  // namespace

DeadlineScope::DeadlineScope(std::chrono::steady_clock::duration budget) : previous_(tls_deadline) {
  auto d = std::chrono::steady_clock::now() + budget;
  tls_deadline = previous_ ? std::min(*previous_, d) : d;
}

DeadlineScope::~DeadlineScope() { tls_deadline = previous_; }

namespace {

using Terms = std::vector<Term>;

// Sum of sorted term lists kept in buckets of geometrically growing capacity.
// Each bucket is stored in ascending order so the leading term sits at back().
class Geobucket {
 public:
  explicit Geobucket(const Ring& ring) : order_(ring.order), field_(ring.field) {}

  // Adds coef * mult * desc[first..].
  void add(const Terms& desc, std::size_t first, const Monomial& mult, std::uint32_t coef) {
    if (first >= desc.size() || coef == 0) return;
    Terms asc = take_buffer();
    asc.reserve(desc.size() - first);
    for (std::size_t k = desc.size(); k-- > first;)
      asc.push_back({desc[k].mono * mult, field_.mul(desc[k].coef, coef)});
    insert(std::move(asc));
  }

  void add(const Terms& desc) {
    Terms asc(desc.rbegin(), desc.rend());
    insert(std::move(asc));
  }

  bool pop_leading(Term& out) {
    for (;;) {
      int best = -1;
      for (int i = 0; i < static_cast<int>(buckets_.size()); ++i) {
        if (buckets_[i].empty()) continue;
        if (best < 0 || mono_cmp_unchecked(buckets_[i].back().mono, buckets_[best].back().mono, order_) > 0)
          best = i;
      }
      if (best < 0) return false;
      const Monomial m = buckets_[best].back().mono;
      std::uint32_t coef = 0;
      for (auto& b : buckets_) {
        if (!b.empty() && b.back().mono == m) {
          coef = field_.add(coef, b.back().coef);
          b.pop_back();
        }
      }
      if (coef) {
        out = {m, coef};
        return true;
      }
    }
  }

 private:
  static std::size_t capacity(std::size_t level) { return std::size_t(8) << (2 * level); }

  Terms take_buffer() {
    if (spare_.empty()) return {};
    Terms t = std::move(spare_.back());
    spare_.pop_back();
    t.clear();
    return t;
  }

  void insert(Terms&& asc) {
    std::size_t level = 0;
    while (capacity(level) < asc.size()) ++level;
    for (;;) {
      if (level >= buckets_.size()) buckets_.resize(level + 1);
      if (buckets_[level].empty()) {
        std::swap(buckets_[level], asc);
        spare_.push_back(std::move(asc));
        return;
      }
      Terms merged = take_buffer();
      merge(buckets_[level], asc, merged);
      spare_.push_back(std::move(asc));
      std::swap(buckets_[level], merged);
      merged.clear();
      spare_.push_back(std::move(merged));
      if (buckets_[level].size() <= capacity(level)) return;
      asc = std::move(buckets_[level]);
      buckets_[level] = take_buffer();
      ++level;
    }
  }

  void merge(const Terms& a, const Terms& b, Terms& out) const {
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
      int c = mono_cmp_unchecked(a[i].mono, b[j].mono, order_);
      if (c < 0) {
        out.push_back(a[i++]);
      } else if (c > 0) {
        out.push_back(b[j++]);
      } else {
        std::uint32_t s = field_.add(a[i].coef, b[j].coef);
        if (s) out.push_back({a[i].mono, s});
        ++i;
        ++j;
      }
    }
    out.insert(out.end(), a.begin() + i, a.end());
    out.insert(out.end(), b.begin() + j, b.end());
  }

  MonomialOrder order_;
  Field field_;
  std::vector<Terms> buckets_;
  std::vector<Terms> spare_;
};

// Monic reducers addressed by index; `skip` excludes one of them.
class ReducerSet {
 public:
  void clear() {
    polys_.clear();
    lms_.clear();
  }
  void add(const Terms* p) {
    polys_.push_back(p);
    lms_.push_back(p->front().mono);
  }
  int find(const Monomial& m, int skip = -1) const {
    int best = -1;
    for (int i = 0; i < static_cast<int>(lms_.size()); ++i) {
      if (i == skip || !lms_[i].divides(m)) continue;
      if (best < 0 || polys_[i]->size() < polys_[best]->size()) best = i;
    }
    return best;
  }
  const Terms& poly(int i) const { return *polys_[i]; }
  std::size_t size() const { return polys_.size(); }

 private:
  std::vector<const Terms*> polys_;
  std::vector<Monomial> lms_;
};

// Full reduction: every term of the result is irreducible.
Terms reduce_fully(Geobucket& bucket, const ReducerSet& reducers, const Field& field, int skip = -1) {
  auto& stats = groebner_stats();
  Terms rem;
  Term t;
  while (bucket.pop_leading(t)) {
    int r = reducers.find(t.mono, skip);
    if (r < 0) {
      rem.push_back(t);
      continue;
    }
    const Terms& g = reducers.poly(r);
    bucket.add(g, 1, t.mono / g.front().mono, field.neg(t.coef));
    if ((++stats.reduction_steps & 1023) == 0) check_deadline();
  }
  return rem;
}

void make_monic(Terms& terms, const Field& field) {
  if (terms.empty() || terms.front().coef == 1) return;
  std::uint32_t inv = field.inv(terms.front().coef);
  for (auto& t : terms) t.coef = field.mul(t.coef, inv);
}

class BuchbergerRun {
 public:
  explicit BuchbergerRun(RingPtr ring) : ring_(std::move(ring)) {}

  // Returns false iff the ideal is the unit ideal.
  bool run(std::span<const Polynomial> generators) {
    const Field& F = ring_->field;
    for (const auto& g : generators) {
      Polynomial p = g.in_ring(ring_);
      if (p.is_zero()) continue;
      if (p.is_nonzero_constant()) return false;
      Terms t = p.terms();
      make_monic(t, F);
      inputs_.push_back(std::move(t));
    }
    for (int k = 0; k < static_cast<int>(inputs_.size()); ++k)
      pairs_.push_back({-1, k, inputs_[k].front().mono, max_degree(inputs_[k])});

    auto& stats = groebner_stats();
    ++stats.bases;
    while (!pairs_.empty()) {
      std::size_t pick = 0;
      for (std::size_t k = 1; k < pairs_.size(); ++k)
        if (pair_less(pairs_[k], pairs_[pick])) pick = k;
      Pair pr = pairs_[pick];
      pairs_[pick] = pairs_.back();
      pairs_.pop_back();

      Geobucket bucket(*ring_);
      if (pr.i < 0) {
        bucket.add(inputs_[pr.j]);
      } else {
        const Entry& a = entries_[pr.i];
        const Entry& b = entries_[pr.j];
        bucket.add(a.terms, 1, pr.lcm / a.lm, 1);
        bucket.add(b.terms, 1, pr.lcm / b.lm, F.prime() - 1);
      }
      ++stats.pairs_reduced;
      check_deadline();
      Terms h = reduce_fully(bucket, reducers_, F);
      if (h.empty()) {
        ++stats.zero_reductions;
        continue;
      }
      if (h.front().mono.is_one()) return false;
      make_monic(h, F);
      update(std::move(h), pr.sugar);
    }
    return true;
  }

  // Minimal basis, inter-reduced, sorted descending.
  std::vector<Polynomial> reduced_basis() const {
    const Field& F = ring_->field;
    std::vector<int> active;
    for (int k = 0; k < static_cast<int>(entries_.size()); ++k)
      if (!entries_[k].redundant) active.push_back(k);
    ReducerSet reducers;
    for (int k : active) reducers.add(&entries_[k].terms);
    std::vector<Polynomial> out;
    out.reserve(active.size());
    for (int pos = 0; pos < static_cast<int>(active.size()); ++pos) {
      const Terms& t = entries_[active[pos]].terms;
      Geobucket bucket(*ring_);
      bucket.add(t, 1, Monomial(ring_->nvars()), 1);
      Terms tail = reduce_fully(bucket, reducers, F, pos);
      Terms full;
      full.reserve(tail.size() + 1);
      full.push_back(t.front());
      full.insert(full.end(), tail.begin(), tail.end());
      out.push_back(Polynomial::from_sorted(ring_, std::move(full)));
    }
    return out;
  }

 private:
  struct Entry {
    Terms terms;
    Monomial lm;
    unsigned sugar;
    bool redundant = false;
  };
  struct Pair {
    int i;  // -1 marks an input generator, indexed by j
    int j;
    Monomial lcm;
    unsigned sugar;
  };

  static unsigned max_degree(const Terms& t) {
    unsigned d = 0;
    for (const auto& x : t) d = std::max(d, x.mono.degree());
    return d;
  }

  bool pair_less(const Pair& a, const Pair& b) const {
    if (a.lcm.degree() != b.lcm.degree()) return a.lcm.degree() < b.lcm.degree();
    return mono_cmp_unchecked(a.lcm, b.lcm, ring_->order) < 0;
  }

  Pair make_pair(int i, int j) const {
    const Entry& a = entries_[i];
    const Entry& b = entries_[j];
    Monomial l = Monomial::lcm(a.lm, b.lm);
    unsigned s = std::max(a.sugar + l.degree() - a.lm.degree(), b.sugar + l.degree() - b.lm.degree());
    return {i, j, l, s};
  }

  // Gebauer-Moeller installation of a new basis element.
  void update(Terms h, unsigned sugar) {
    const int hi = static_cast<int>(entries_.size());
    Monomial lm = h.front().mono;
    entries_.push_back({std::move(h), lm, sugar, false});

    std::vector<Pair> candidates;
    for (int g : active_) candidates.push_back(make_pair(g, hi));

    std::vector<Pair> kept;
    for (std::size_t k = 0; k < candidates.size(); ++k) {
      const Pair& p = candidates[k];
      bool keep = Monomial::coprime(entries_[p.i].lm, lm);
      if (!keep) {
        keep = true;
        for (std::size_t q = k + 1; q < candidates.size() && keep; ++q)
          if (candidates[q].lcm.divides(p.lcm)) keep = false;
        for (std::size_t q = 0; q < kept.size() && keep; ++q)
          if (kept[q].lcm.divides(p.lcm)) keep = false;
      }
      if (keep) kept.push_back(p);
    }

    std::vector<Pair> next;
    next.reserve(pairs_.size() + kept.size());
    for (const Pair& p : pairs_) {
      if (p.i >= 0 && lm.divides(p.lcm)) {
        Monomial l1 = Monomial::lcm(entries_[p.i].lm, lm);
        Monomial l2 = Monomial::lcm(entries_[p.j].lm, lm);
        if (!(l1 == p.lcm) && !(l2 == p.lcm)) continue;
      }
      next.push_back(p);
    }
    for (const Pair& p : kept)
      if (!Monomial::coprime(entries_[p.i].lm, lm)) next.push_back(p);
    pairs_ = std::move(next);

    std::vector<int> still_active;
    for (int g : active_) {
      if (lm.divides(entries_[g].lm))
        entries_[g].redundant = true;
      else
        still_active.push_back(g);
    }
    still_active.push_back(hi);
    active_ = std::move(still_active);

    reducers_.clear();
    for (int g : active_) reducers_.add(&entries_[g].terms);
  }

  RingPtr ring_;
  std::vector<Terms> inputs_;
  std::deque<Entry> entries_;  // stable addresses for ReducerSet
  std::vector<int> active_;
  std::vector<Pair> pairs_;
  ReducerSet reducers_;
};

RingPtr grevlex_of(const RingPtr& ring) { return with_order(ring, MonomialOrder::grevlex()); }

// Ring with one extra variable ranked above the others under grevlex; only
// used for unit-ideal tests, where any order will do.
RingPtr with_rabinowitsch_variable(const RingPtr& ring) {
  auto names = ring->names;
  names.push_back("_t");
  return std::make_shared<const Ring>(ring->field, std::move(names), MonomialOrder::grevlex());
}

}  // namespace

GroebnerBasis GroebnerBasis::unit(RingPtr ring) {
  GroebnerBasis b(ring);
  b.gens_.push_back(Polynomial::constant(ring, 1));
  b.unit_ = true;
  return b;
}

GroebnerBasis GroebnerBasis::from_reduced(RingPtr ring, std::vector<Polynomial> generators) {
  for (const auto& g : generators)
    if (g.is_nonzero_constant()) return unit(std::move(ring));
  GroebnerBasis b(ring);
  for (auto& g : generators) {
    if (g.is_zero()) continue;
    b.gens_.push_back(g.in_ring(ring));
  }
  const auto& ord = ring->order;
  std::sort(b.gens_.begin(), b.gens_.end(), [&](const Polynomial& x, const Polynomial& y) {
    return mono_cmp_unchecked(x.leading_monomial(), y.leading_monomial(), ord) > 0;
  });
  return b;
}

bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) {
  if (a.unit_ != b.unit_ || a.gens_.size() != b.gens_.size()) return false;
  for (std::size_t i = 0; i < a.gens_.size(); ++i)
    if (!(a.gens_[i] == b.gens_[i])) return false;
  return true;
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis) {
  const RingPtr& ring = basis.ring();
  Polynomial g = f.in_ring(ring);
  if (basis.is_unit_ideal()) return Polynomial(ring);
  ReducerSet reducers;
  for (const auto& p : basis.generators()) reducers.add(&p.terms());
  Geobucket bucket(*ring);
  bucket.add(g.terms());
  return Polynomial::from_sorted(ring, reduce_fully(bucket, reducers, ring->field));
}

GroebnerBasis buchberger(const RingPtr& ring, std::span<const Polynomial> generators) {
  BuchbergerRun run(ring);
  if (!run.run(generators)) return GroebnerBasis::unit(ring);
  return GroebnerBasis::from_reduced(ring, run.reduced_basis());
}

bool generates_unit_ideal(const RingPtr& ring, std::span<const Polynomial> generators) {
  BuchbergerRun run(ring);
  return !run.run(generators);
}

GroebnerBasis saturate(const RingPtr& ring, std::span<const Polynomial> generators, const Polynomial& g) {
  if (g.is_zero()) throw ContractViolation("saturation by the zero polynomial");
  RingPtr base = grevlex_of(ring);
  if (g.is_nonzero_constant()) return buchberger(base, generators);
  RingPtr ext = with_elimination_variable(base);
  const std::size_t t = base->nvars();
  std::vector<Polynomial> gens;
  gens.reserve(generators.size() + 1);
  for (const auto& f : generators) gens.push_back(f.in_ring(ext));
  Polynomial tg = g.in_ring(ext).times(Monomial::variable(ext->nvars(), t));
  gens.push_back(tg - Polynomial::constant(ext, 1));
  GroebnerBasis full = buchberger(ext, gens);
  if (full.is_unit_ideal()) return GroebnerBasis::unit(base);
  std::vector<Polynomial> kept;
  for (const auto& p : full.generators())
    if (!p.uses_variable(t)) kept.push_back(p.in_ring(base));
  return GroebnerBasis::from_reduced(base, std::move(kept));
}

GroebnerBasis saturate_by_factors(const RingPtr& ring, std::span<const Polynomial> generators,
                                  std::span<const Polynomial> factors) {
  RingPtr base = grevlex_of(ring);
  std::vector<Polynomial> current(generators.begin(), generators.end());
  std::optional<GroebnerBasis> result;
  for (const auto& g : factors) {
    if (g.is_zero()) throw ContractViolation("saturation by the zero polynomial");
    if (g.is_nonzero_constant()) continue;
    result = saturate(base, current, g);
    if (result->is_unit_ideal()) return *result;
    current = result->generators();
  }
  if (!result) return buchberger(base, current);
  return *result;
}

bool ideal_member(const Polynomial& f, const GroebnerBasis& basis) {
  if (basis.is_unit_ideal() || f.is_zero()) return true;
  return normal_form(f, basis).is_zero();
}

bool radical_member(const Polynomial& f, std::span<const Polynomial> generators) {
  if (f.is_zero()) return true;
  RingPtr base = f.ring();
  RingPtr ext = with_rabinowitsch_variable(base);
  const std::size_t t = base->nvars();
  std::vector<Polynomial> gens;
  gens.reserve(generators.size() + 1);
  for (const auto& g : generators) gens.push_back(g.in_ring(ext));
  gens.push_back(f.in_ring(ext).times(Monomial::variable(ext->nvars(), t)) - Polynomial::constant(ext, 1));
  return generates_unit_ideal(ext, gens);
}

bool radical_member(const Polynomial& f, const GroebnerBasis& basis) {
  if (basis.is_unit_ideal() || f.is_zero()) return true;
  if (ideal_member(f, basis)) return true;
  return radical_member(f.in_ring(basis.ring()), basis.generators());
}

GroebnerBasis ideal_intersect(const GroebnerBasis& a, const GroebnerBasis& b) {
  RingPtr base = grevlex_of(a.ring());
  if (a.is_unit_ideal()) return GroebnerBasis::from_reduced(base, b.generators());
  if (b.is_unit_ideal()) return GroebnerBasis::from_reduced(base, a.generators());
  if (a.is_zero_ideal() || b.is_zero_ideal()) return GroebnerBasis(base);
  RingPtr ext = with_elimination_variable(base);
  const std::size_t t = base->nvars();
  Polynomial tv = Polynomial::variable(ext, t);
  Polynomial one_minus_t = Polynomial::constant(ext, 1) - tv;
  std::vector<Polynomial> gens;
  for (const auto& g : a.generators()) gens.push_back(g.in_ring(ext) * tv);
  for (const auto& g : b.generators()) gens.push_back(g.in_ring(ext) * one_minus_t);
  GroebnerBasis full = buchberger(ext, gens);
  std::vector<Polynomial> kept;
  for (const auto& p : full.generators())
    if (!p.uses_variable(t)) kept.push_back(p.in_ring(base));
  return GroebnerBasis::from_reduced(base, std::move(kept));
}

namespace {

void min_hitting_set(const std::vector<std::uint32_t>& sets, std::uint32_t chosen, int& best) {
  int size = std::popcount(chosen);
  if (size >= best) return;
  // branch on the smallest set not yet hit
  int pick = -1;
  for (int k = 0; k < static_cast<int>(sets.size()); ++k) {
    if (sets[k] & chosen) continue;
    if (pick < 0 || std::popcount(sets[k]) < std::popcount(sets[pick])) pick = k;
  }
  if (pick < 0) {
    best = size;
    return;
  }
  if (size + 1 >= best) return;
  for (std::uint32_t rest = sets[pick]; rest; rest &= rest - 1)
    min_hitting_set(sets, chosen | (rest & (~rest + 1)), best);
}

}  // namespace

int dimension(const GroebnerBasis& basis) {
  if (basis.is_unit_ideal()) throw ContractViolation("empty variety has no dimension");
  const int n = static_cast<int>(basis.ring()->nvars());
  std::vector<std::uint32_t> sets;
  for (const auto& g : basis.generators()) sets.push_back(g.leading_monomial().support());
  int best = n;
  min_hitting_set(sets, 0, best);
  return n - best;
}

std::uint64_t quotient_degree(const GroebnerBasis& basis) {
  if (basis.is_unit_ideal()) return 0;
  const std::size_t n = basis.ring()->nvars();
  std::vector<Monomial> lms;
  std::uint32_t pure = 0;
  for (const auto& g : basis.generators()) {
    const Monomial& m = g.leading_monomial();
    lms.push_back(m);
    if (std::popcount(m.support()) == 1) pure |= m.support();
  }
  if (n > 0 && pure != (n == 32 ? 0xffffffffu : ((1u << n) - 1)))
    throw ContractViolation("quotient degree requires a zero-dimensional ideal");
  auto standard = [&](const Monomial& m) {
    for (const auto& l : lms)
      if (l.divides(m)) return false;
    return true;
  };
  // every standard monomial is reached exactly once by raising variables in
  // non-decreasing index order
  std::uint64_t count = 0;
  std::vector<std::pair<Monomial, std::size_t>> stack{{Monomial(n), 0}};
  while (!stack.empty()) {
    auto [m, first] = stack.back();
    stack.pop_back();
    ++count;
    for (std::size_t v = first; v < n; ++v) {
      Monomial next = m * Monomial::variable(n, v);
      if (standard(next)) stack.push_back({next, v});
    }
  }
  return count;
}

bool satisfies_buchberger_criterion(const GroebnerBasis& basis) {
  if (basis.is_unit_ideal()) return true;
  const RingPtr& ring = basis.ring();
  const auto& gens = basis.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      const Term& a = gens[i].leading_term();
      const Term& b = gens[j].leading_term();
      Monomial l = Monomial::lcm(a.mono, b.mono);
      Polynomial s = gens[i].times(l / a.mono, ring->field.inv(a.coef)) -
                     gens[j].times(l / b.mono, ring->field.inv(b.coef));
      if (!normal_form(s, basis).is_zero()) return false;
    }
  }
  return true;
}

}  // namespace equidim
