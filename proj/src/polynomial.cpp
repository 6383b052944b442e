#include "equidim/polynomial.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace equidim {

namespace {

void check_nvars(std::size_t n) {
  if (n > kMaxVars)
    throw ContractViolation("at most " + std::to_string(kMaxVars) + " variables are supported, got " +
                            std::to_string(n));
}

}  // namespace

Monomial::Monomial(std::size_t nvars) : nvars_(static_cast<std::uint8_t>(nvars)) { check_nvars(nvars); }

Monomial::Monomial(std::size_t nvars, std::span<const unsigned> exponents) : Monomial(nvars) {
  if (exponents.size() != nvars) throw ContractViolation("exponent vector length does not match variable count");
  for (std::size_t i = 0; i < nvars; ++i) set(i, exponents[i]);
}

Monomial Monomial::variable(std::size_t nvars, std::size_t index, unsigned power) {
  Monomial m(nvars);
  m.set(index, power);
  return m;
}

void Monomial::set(std::size_t i, unsigned e) {
  if (i >= nvars_) throw ContractViolation("variable index out of range");
  if (e > kMaxExponent) throw std::overflow_error("monomial exponent exceeds " + std::to_string(kMaxExponent));
  const std::size_t r = nvars_ - 1 - i;
  const int shift = 48 - 16 * static_cast<int>(r & 3);
  degree_ = degree_ - lane_at(r) + e;
  w_[r >> 2] = (w_[r >> 2] & ~(std::uint64_t(0xffff) << shift)) | (std::uint64_t(e) << shift);
  if (e)
    support_ |= (1u << i);
  else
    support_ &= ~(1u << i);
}

void Monomial::recompute_support() {
  std::uint32_t s = 0;
  for (std::size_t w = 0; w < words(); ++w) {
    const std::uint64_t low = ~kHigh;
    std::uint64_t nz = (w_[w] | ((w_[w] & low) + low)) & kHigh;
    while (nz) {
      const int bit = std::countr_zero(nz);
      const std::size_t r = w * 4 + static_cast<std::size_t>(3 - (bit >> 4));
      s |= 1u << (nvars_ - 1 - r);
      nz &= nz - 1;
    }
  }
  support_ = s;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  std::uint64_t high = 0;
  for (std::size_t w = 0; w < a.words(); ++w) {
    r.w_[w] = a.w_[w] + b.w_[w];
    high |= r.w_[w];
  }
  if (high & Monomial::kHigh)
    throw std::overflow_error("monomial exponent exceeds " + std::to_string(Monomial::kMaxExponent));
  r.degree_ = a.degree_ + b.degree_;
  r.support_ = a.support_ | b.support_;
  return r;
}

Monomial Monomial::operator/(const Monomial& d) const {
  Monomial r = *this;
  for (std::size_t w = 0; w < words(); ++w) r.w_[w] = w_[w] - d.w_[w];
  r.degree_ = degree_ - d.degree_;
  r.recompute_support();
  return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  unsigned deg = 0;
  for (std::size_t w = 0; w < a.words(); ++w) {
    // lanes where a >= b keep their high bit after the subtraction
    std::uint64_t ge = ((a.w_[w] | kHigh) - b.w_[w]) & kHigh;
    std::uint64_t sel = (ge >> 15) * 0xffff;
    r.w_[w] = (a.w_[w] & sel) | (b.w_[w] & ~sel);
    std::uint64_t x = r.w_[w];
    x = (x & 0x0000ffff0000ffffull) + ((x >> 16) & 0x0000ffff0000ffffull);
    x = (x & 0xffffffffull) + (x >> 32);
    deg += static_cast<unsigned>(x);
  }
  r.degree_ = deg;
  r.support_ = a.support_ | b.support_;
  return r;
}

Monomial Monomial::extended(std::size_t extra) const {
  check_nvars(nvars_ + extra);
  Monomial r(nvars_ + extra);
  for (std::size_t i = 0; i < nvars_; ++i)
    if (unsigned e = (*this)[i]) r.set(i, e);
  return r;
}

Monomial Monomial::truncated(std::size_t n) const {
  Monomial r(n);
  for (std::size_t i = 0; i < nvars_; ++i) {
    if (i < n)
      r.set(i, (*this)[i]);
    else if ((*this)[i])
      throw ContractViolation("cannot drop a variable that occurs in the monomial");
  }
  return r;
}

int mono_cmp(const Monomial& a, const Monomial& b, const MonomialOrder& order) {
  if (a.nvars() != b.nvars()) throw ContractViolation("monomials of different lengths");
  if (order.kind == MonomialOrder::Kind::elim_block && order.block >= a.nvars())
    throw ContractViolation("elimination block must leave at least one variable");
  return mono_cmp_unchecked(a, b, order);
}

Ring::Ring(Field f, std::vector<std::string> variable_names, MonomialOrder ord)
    : field(f), names(std::move(variable_names)), order(ord) {
  check_nvars(names.size());
  if (order.kind == MonomialOrder::Kind::elim_block && order.block >= names.size())
    throw ContractViolation("elimination block must leave at least one variable");
}

RingPtr make_ring(std::vector<std::string> names, std::uint32_t prime, MonomialOrder order) {
  return std::make_shared<const Ring>(Field(prime), std::move(names), order);
}

RingPtr make_ring(std::size_t nvars, std::uint32_t prime) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < nvars; ++i) names.push_back("x" + std::to_string(i + 1));
  return make_ring(std::move(names), prime);
}

RingPtr with_elimination_variable(const RingPtr& ring, const std::string& name) {
  auto names = ring->names;
  names.push_back(name);
  return std::make_shared<const Ring>(ring->field, std::move(names), MonomialOrder::elim_block(1));
}

RingPtr with_order(const RingPtr& ring, MonomialOrder order) {
  if (ring->order == order) return ring;
  return std::make_shared<const Ring>(ring->field, ring->names, order);
}

// ---------------------------------------------------------------------------

Polynomial::Polynomial(RingPtr ring, std::vector<Term> terms) : ring_(std::move(ring)) {
  const auto& ord = ring_->order;
  const auto& F = ring_->field;
  for (auto& t : terms) {
    if (t.mono.nvars() != ring_->nvars()) throw ContractViolation("term has wrong number of variables");
    t.coef %= F.prime();
  }
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return mono_cmp_unchecked(a.mono, b.mono, ord) > 0; });
  for (auto& t : terms) {
    if (!terms_.empty() && terms_.back().mono == t.mono) {
      terms_.back().coef = F.add(terms_.back().coef, t.coef);
      if (terms_.back().coef == 0) terms_.pop_back();
    } else if (t.coef != 0) {
      terms_.push_back(t);
    }
  }
}

Polynomial Polynomial::constant(RingPtr ring, std::int64_t c) {
  std::uint32_t v = ring->field.reduce(c);
  Polynomial p(ring);
  if (v) p.terms_.push_back({Monomial(ring->nvars()), v});
  return p;
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  auto n = ring->nvars();
  return monomial(std::move(ring), Monomial::variable(n, index));
}

Polynomial Polynomial::monomial(RingPtr ring, Monomial m, std::uint32_t coef) {
  Polynomial p(ring);
  coef %= ring->field.prime();
  if (coef) p.terms_.push_back({m, coef});
  return p;
}

Polynomial Polynomial::from_sorted(RingPtr ring, std::vector<Term> terms) {
  Polynomial p(std::move(ring));
  p.terms_ = std::move(terms);
  return p;
}

unsigned Polynomial::total_degree() const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw ContractViolation("zero polynomial has no leading term");
  return terms_.front();
}

void Polynomial::check_ring(const Polynomial& o) const {
  if (ring_ == o.ring_) return;
  if (!ring_ || !o.ring_ || !ring_->same_as(*o.ring_))
    throw ContractViolation("polynomials belong to different rings");
}

namespace {

// Merges two descending term lists, b scaled by `bc`.
std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b, std::uint32_t bc,
                              const Ring& ring) {
  const auto& ord = ring.order;
  const auto& F = ring.field;
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    int c = mono_cmp_unchecked(a[i].mono, b[j].mono, ord);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back({b[j].mono, F.mul(b[j].coef, bc)});
      ++j;
    } else {
      std::uint32_t s = F.add(a[i].coef, F.mul(b[j].coef, bc));
      if (s) out.push_back({a[i].mono, s});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back({b[j].mono, F.mul(b[j].coef, bc)});
  return out;
}

}  // namespace

Polynomial Polynomial::operator+(const Polynomial& o) const {
  check_ring(o);
  return from_sorted(ring_, merge_terms(terms_, o.terms_, 1, *ring_));
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  check_ring(o);
  return from_sorted(ring_, merge_terms(terms_, o.terms_, ring_->field.prime() - 1, *ring_));
}

Polynomial Polynomial::operator-() const { return scaled(ring_ ? ring_->field.prime() - 1 : 0); }

Polynomial Polynomial::scaled(std::uint32_t c) const {
  if (!ring_) return *this;
  c %= ring_->field.prime();
  if (c == 0) return Polynomial(ring_);
  std::vector<Term> out = terms_;
  for (auto& t : out) t.coef = ring_->field.mul(t.coef, c);
  return from_sorted(ring_, std::move(out));
}

Polynomial Polynomial::times(const Monomial& m, std::uint32_t c) const {
  c %= ring_->field.prime();
  if (c == 0) return Polynomial(ring_);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back({t.mono * m, ring_->field.mul(t.coef, c)});
  return from_sorted(ring_, std::move(out));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_ring(o);
  if (is_zero() || o.is_zero()) return Polynomial(ring_);
  const Polynomial& small = size() <= o.size() ? *this : o;
  const Polynomial& big = size() <= o.size() ? o : *this;
  Polynomial acc(ring_);
  for (const auto& t : small.terms_) acc = acc + big.times(t.mono, t.coef);
  return acc;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(ring_->field.inv(leading_coefficient()));
}

Polynomial Polynomial::in_ring(const RingPtr& target) const {
  if (ring_ == target) return *this;
  if (!(ring_->field == target->field)) throw ContractViolation("cannot move polynomial between fields");
  std::vector<Term> out;
  out.reserve(terms_.size());
  const std::size_t n = target->nvars();
  for (const auto& t : terms_) {
    Monomial m = n >= t.mono.nvars() ? t.mono.extended(n - t.mono.nvars()) : t.mono.truncated(n);
    out.push_back({m, t.coef});
  }
  if (target->order == ring_->order && n == ring_->nvars()) return from_sorted(target, std::move(out));
  return Polynomial(target, std::move(out));
}

std::uint32_t Polynomial::evaluate(std::span<const std::uint32_t> point) const {
  const auto& F = ring_->field;
  if (point.size() != ring_->nvars()) throw ContractViolation("point has wrong dimension");
  std::uint32_t acc = 0;
  for (const auto& t : terms_) {
    std::uint32_t v = t.coef;
    for (std::size_t i = 0; i < point.size() && v; ++i)
      if (t.mono[i]) v = F.mul(v, F.pow(point[i], t.mono[i]));
    acc = F.add(acc, v);
  }
  return acc;
}

bool Polynomial::uses_variable(std::size_t index) const {
  for (const auto& t : terms_)
    if (t.mono[index]) return true;
  return false;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.terms_ != b.terms_) return false;
  if (a.ring_ == b.ring_) return true;
  if (!a.ring_ || !b.ring_) return a.terms_.empty();
  return a.ring_->same_as(*b.ring_);
}

Polynomial derivative(const Polynomial& f, std::size_t index) {
  const auto& ring = f.ring();
  if (index >= ring->nvars()) throw ContractViolation("variable index out of range");
  std::vector<Term> out;
  for (const auto& t : f.terms()) {
    unsigned e = t.mono[index];
    if (e == 0) continue;
    std::uint32_t c = ring->field.mul(t.coef, ring->field.reduce(e));
    if (c == 0) continue;
    Monomial m = t.mono;
    m.set(index, e - 1);
    out.push_back({m, c});
  }
  return Polynomial(ring, std::move(out));
}

std::string to_string(const Polynomial& f) {
  if (f.is_zero()) return "0";
  const auto& ring = *f.ring();
  const std::uint32_t p = ring.field.prime();
  std::ostringstream os;
  bool first = true;
  for (const auto& t : f.terms()) {
    bool negative = t.coef > p / 2;
    std::uint32_t mag = negative ? p - t.coef : t.coef;
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;
    bool wrote = false;
    if (mag != 1 || t.mono.is_one()) {
      os << mag;
      wrote = true;
    }
    for (std::size_t i = 0; i < ring.nvars(); ++i) {
      if (!t.mono[i]) continue;
      if (wrote) os << '*';
      os << ring.names[i];
      if (t.mono[i] > 1) os << '^' << unsigned(t.mono[i]);
      wrote = true;
    }
  }
  return os.str();
}

std::uint32_t random_residue(const Field& field, Rng& rng) {
  std::uniform_int_distribution<std::uint32_t> dist(0, field.prime() - 1);
  return dist(rng);
}

std::vector<Polynomial> random_affine_forms(const RingPtr& ring, std::size_t count, Rng& rng) {
  const std::size_t n = ring->nvars();
  std::vector<Polynomial> forms;
  forms.reserve(count);
  while (forms.size() < count) {
    std::vector<Term> terms;
    terms.push_back({Monomial(n), random_residue(ring->field, rng)});
    for (std::size_t i = 0; i < n; ++i) terms.push_back({Monomial::variable(n, i), random_residue(ring->field, rng)});
    Polynomial form(ring, std::move(terms));
    if (form.total_degree() == 1) forms.push_back(std::move(form));
  }
  return forms;
}

Polynomial random_dense_polynomial(const RingPtr& ring, std::span<const std::size_t> variables, unsigned degree,
                                   Rng& rng) {
  const std::size_t n = ring->nvars();
  std::vector<Term> terms;
  // enumerate exponent vectors over `variables` with total degree <= degree
  std::vector<unsigned> exps(variables.size(), 0);
  auto emit = [&] {
    Monomial m(n);
    for (std::size_t k = 0; k < variables.size(); ++k)
      if (exps[k]) m.set(variables[k], exps[k]);
    terms.push_back({m, random_residue(ring->field, rng)});
  };
  auto rec = [&](auto&& self, std::size_t k, unsigned remaining) -> void {
    if (k == variables.size()) {
      emit();
      return;
    }
    for (unsigned e = 0; e <= remaining; ++e) {
      exps[k] = e;
      self(self, k + 1, remaining - e);
    }
    exps[k] = 0;
  };
  rec(rec, 0, degree);
  return Polynomial(ring, std::move(terms));
}

}  // namespace equidim
