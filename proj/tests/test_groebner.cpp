#include <doctest.h>

#include <algorithm>
#include <bit>
#include <set>

#include "equidim/groebner.hpp"
#include "util.hpp"

using namespace equidim;
using testutil::P;
using testutil::Ps;

namespace {

std::set<std::string> gens(const GroebnerBasis& g) {
  auto v = testutil::strs(g.generators());
  return {v.begin(), v.end()};
}

GroebnerBasis gb(const RingPtr& R, std::initializer_list<const char*> srcs) {
  auto F = Ps(R, srcs);
  return buchberger(R, F);
}

// Largest variable set containing the support of no leading monomial.
int brute_force_dimension(const GroebnerBasis& g) {
  const int n = static_cast<int>(g.ring()->nvars());
  int best = 0;
  for (std::uint32_t S = 0; S < (1u << n); ++S) {
    bool independent = true;
    for (const auto& p : g.generators())
      if ((p.leading_monomial().support() & ~S) == 0) independent = false;
    if (independent) best = std::max(best, std::popcount(S));
  }
  return best;
}

void check_reduced(const GroebnerBasis& g) {
  CHECK(satisfies_buchberger_criterion(g));
  const auto& G = g.generators();
  for (std::size_t i = 0; i < G.size(); ++i) {
    CHECK(G[i].leading_coefficient() == 1);
    for (std::size_t j = 0; j < G.size(); ++j) {
      if (i == j) continue;
      for (const auto& t : G[i].terms()) CHECK(!G[j].leading_monomial().divides(t.mono));
    }
  }
}

}  // namespace

TEST_CASE("normal form examples") {
  RingPtr R = make_ring({"x", "y"});
  CHECK(normal_form(P(R, "x^2"), gb(R, {"x"})).is_zero());
  CHECK(normal_form(P(R, "y"), gb(R, {"x"})) == P(R, "y"));
  CHECK(normal_form(P(R, "x*y + y"), gb(R, {"x - 1"})) == P(R, "2*y"));
}

TEST_CASE("buchberger examples") {
  RingPtr R = make_ring({"x", "y"});
  CHECK(gens(gb(R, {"x + y", "x - y"})) == std::set<std::string>{"x", "y"});
  CHECK(gens(gb(R, {"x"})) == std::set<std::string>{"x"});
  GroebnerBasis g = gb(R, {"x^2 + y^2", "x*y"});
  CHECK(gens(g) == std::set<std::string>{"x*y", "x^2 + y^2", "y^3"});
  check_reduced(g);
  CHECK(gb(R, {"x", "x - 1"}).is_unit_ideal());
  CHECK(gens(gb(R, {"x", "x - 1"})) == std::set<std::string>{"1"});
  CHECK(GroebnerBasis(R).is_zero_ideal());
  CHECK(buchberger(R, std::vector<Polynomial>{}).is_zero_ideal());
}

TEST_CASE("bases agree with an external computer algebra system") {
  // reference bases computed offline (grevlex, x > y > z)
  struct Case {
    std::uint32_t p;
    std::vector<const char*> input;
    std::vector<const char*> reference;
  };
  std::vector<Case> cases{
      {7,
       {"x^2 + y*z - 2", "y^2 - x*z + 1", "x*y*z - 3*x + z"},
       {"5*y*z^3 + x*y + 5*x*z + 2*y*z + 4*z^2", "2*z^4 + x*y + x*z + 3*y*z + 3*z^2 + 4", "x*y*z + 4*x + z",
        "x*z^2 + 4*y*z^2 + 4*z^3 + 5*x + 4*y + 4*z", "x^2 + y*z + 5", "6*y^2 + x*z + 6"}},
      {65521,
       {"x^3 - y*z", "y^2 - x", "z^2*x - y + 3"},
       {"x^3 - y*z", "x^2*y - z", "x*z^2 - y + 3", "-z^3 + x^2 - 3*x*y", "-y^2 + x"}},
      {65521,
       {"x*y - z^2", "x^2*z - y", "y*z - x + 1"},
       {"x^3 - x^2 - y^2", "y^3 + x*z^2 - x + 1", "x^2*z - y", "-z^3 + x^2 - x", "x*y - z^2", "-y*z + x - 1"}},
  };
  for (const auto& c : cases) {
    RingPtr R = make_ring({"x", "y", "z"}, c.p);
    std::vector<Polynomial> in, ref;
    for (auto s : c.input) in.push_back(P(R, s));
    for (auto s : c.reference) ref.push_back(P(R, s).monic());
    GroebnerBasis ours = buchberger(R, in);
    GroebnerBasis theirs = GroebnerBasis::from_reduced(R, ref);
    check_reduced(ours);
    CHECK(ours.size() == theirs.size());
    for (const auto& f : ours.generators()) CHECK(normal_form(f, theirs).is_zero());
    for (const auto& f : theirs.generators()) CHECK(normal_form(f, ours).is_zero());
    CHECK(ours == theirs);
  }
}

TEST_CASE("random systems: criterion, membership, uniqueness") {
  RingPtr R = make_ring({"a", "b", "c", "d"}, 65521);
  Rng rng(2024);
  std::vector<std::size_t> vars{0, 1, 2, 3};
  for (int k = 0; k < 15; ++k) {
    std::vector<Polynomial> F;
    int count = 2 + k % 3;
    for (int i = 0; i < count; ++i) F.push_back(random_dense_polynomial(R, vars, 2, rng));
    GroebnerBasis g = buchberger(R, F);
    check_reduced(g);
    for (const auto& f : F) CHECK(ideal_member(f, g));
    // same ideal, different generators: identical reduced basis
    std::vector<Polynomial> F2 = F;
    F2[0] = F2[0] + F2[1] * random_dense_polynomial(R, vars, 1, rng);
    std::reverse(F2.begin(), F2.end());
    CHECK(buchberger(R, F2) == g);
  }
}

TEST_CASE("saturation examples") {
  RingPtr R = make_ring({"x", "y"});
  auto s1 = saturate(R, Ps(R, {"x*y"}), P(R, "x"));
  CHECK(gens(s1) == std::set<std::string>{"y"});
  CHECK(saturate(R, Ps(R, {"x^2"}), P(R, "x")).is_unit_ideal());
  CHECK(gens(saturate(R, Ps(R, {"x"}), P(R, "y"))) == std::set<std::string>{"x"});
  CHECK_THROWS_AS(saturate(R, Ps(R, {"x"}), Polynomial(R)), ContractViolation);
  CHECK(gens(saturate(R, Ps(R, {"x*y"}), P(R, "3"))) == std::set<std::string>{"x*y"});
}

TEST_CASE("saturation soundness and idempotence") {
  RingPtr R = make_ring({"x", "y", "z"}, 65521);
  Rng rng(77);
  std::vector<std::size_t> vars{0, 1, 2};
  for (int k = 0; k < 10; ++k) {
    // force a component inside V(g)
    Polynomial g = random_dense_polynomial(R, vars, 1, rng);
    Polynomial a = random_dense_polynomial(R, vars, 2, rng);
    Polynomial b = random_dense_polynomial(R, vars, 1, rng);
    std::vector<Polynomial> F{a * g, b * g * g};
    GroebnerBasis base = buchberger(R, F);
    GroebnerBasis s = saturate(R, F, g);
    for (const auto& f : F) CHECK(ideal_member(f, s));
    for (const auto& h : s.generators()) {
      Polynomial acc = h;
      bool found = false;
      for (int e = 0; e <= 50 && !found; ++e) {
        if (ideal_member(acc, base)) found = true;
        acc = acc * g;
      }
      CHECK(found);
    }
    CHECK(saturate(R, s.generators(), g) == s);
    GroebnerBasis by_factors = saturate_by_factors(R, F, std::vector<Polynomial>{g, b});
    CHECK(by_factors == saturate(R, F, g * b));
  }
}

TEST_CASE("membership examples") {
  RingPtr R = make_ring({"x", "y"});
  CHECK(ideal_member(P(R, "x*y"), gb(R, {"x"})));
  CHECK(!ideal_member(P(R, "y"), gb(R, {"x"})));
  CHECK(ideal_member(Polynomial(R), gb(R, {"x"})));
  CHECK(radical_member(P(R, "x"), gb(R, {"x^2"})));
  CHECK(!radical_member(P(R, "y"), gb(R, {"x"})));
  CHECK(radical_member(P(R, "x + y"), gb(R, {"x^2", "y^2"})));
  CHECK(!ideal_member(P(R, "x + y"), gb(R, {"x^2", "y^2"})));
}

TEST_CASE("ideal membership implies radical membership") {
  RingPtr R = make_ring({"x", "y", "z"}, 65521);
  Rng rng(5);
  std::vector<std::size_t> vars{0, 1, 2};
  for (int k = 0; k < 10; ++k) {
    std::vector<Polynomial> F{random_dense_polynomial(R, vars, 2, rng), random_dense_polynomial(R, vars, 2, rng)};
    GroebnerBasis g = buchberger(R, F);
    Polynomial inside = F[0] * random_dense_polynomial(R, vars, 1, rng) + F[1];
    CHECK(radical_member(inside, g));
    CHECK(radical_member(F[0].pow(2), g));
  }
}

TEST_CASE("intersection examples") {
  RingPtr R = make_ring({"x", "y"});
  CHECK(gens(ideal_intersect(gb(R, {"x"}), gb(R, {"y"}))) == std::set<std::string>{"x*y"});
  CHECK(gens(ideal_intersect(gb(R, {"x"}), gb(R, {"x"}))) == std::set<std::string>{"x"});
  CHECK(gens(ideal_intersect(GroebnerBasis::unit(R), gb(R, {"x"}))) == std::set<std::string>{"x"});
  CHECK(gens(ideal_intersect(gb(R, {"x", "y"}), gb(R, {"x - 1", "y"}))) == std::set<std::string>{"y", "x^2 - x"});
}

TEST_CASE("dimension examples") {
  RingPtr R3 = make_ring({"x", "y", "z"});
  CHECK(dimension(GroebnerBasis(R3)) == 3);
  CHECK(dimension(gb(R3, {"x*y", "x*z"})) == 2);
  RingPtr R2 = make_ring({"x", "y"});
  CHECK(dimension(gb(R2, {"x"})) == 1);
  CHECK_THROWS_WITH(dimension(GroebnerBasis::unit(R2)), "empty variety has no dimension");
}

TEST_CASE("dimension agrees with subset search") {
  RingPtr R = make_ring({"a", "b", "c", "d", "e"}, 65521);
  Rng rng(99);
  std::uniform_int_distribution<int> pick(0, 4), count(1, 4);
  for (int k = 0; k < 60; ++k) {
    std::vector<Polynomial> F;
    int m = count(rng);
    for (int i = 0; i < m; ++i) {
      std::vector<std::size_t> vars;
      for (int v = 0; v < 5; ++v)
        if (pick(rng) < 2) vars.push_back(static_cast<std::size_t>(v));
      if (vars.empty()) vars.push_back(static_cast<std::size_t>(pick(rng)));
      F.push_back(random_dense_polynomial(R, vars, 2, rng) - Polynomial::constant(R, 0));
    }
    GroebnerBasis g = buchberger(R, F);
    if (g.is_unit_ideal()) continue;
    CHECK(dimension(g) == brute_force_dimension(g));
  }
}

TEST_CASE("quotient degree examples") {
  RingPtr R = make_ring({"x", "y"});
  CHECK(quotient_degree(gb(R, {"x", "y"})) == 1);
  CHECK(quotient_degree(gb(R, {"x^2", "y"})) == 2);
  CHECK(quotient_degree(gb(R, {"x^2 - 1", "y^2 - 1"})) == 4);
  CHECK_THROWS_AS(quotient_degree(gb(R, {"x"})), ContractViolation);
  // Bezout: two generic conics meet in 4 points
  Rng rng(1);
  std::vector<std::size_t> vars{0, 1};
  std::vector<Polynomial> F{random_dense_polynomial(R, vars, 2, rng), random_dense_polynomial(R, vars, 2, rng)};
  CHECK(quotient_degree(buchberger(R, F)) == 4);
}

TEST_CASE("deadline scope aborts and restores") {
  RingPtr R = make_ring({"x", "y", "z"});
  auto F = Ps(R, {"x^2 + y*z - 1", "y^2 + x*z - 2", "z^2 + x*y - 3"});
  {
    DeadlineScope scope(std::chrono::nanoseconds(-1));
    CHECK_THROWS_AS(buchberger(R, F), CostGuardExceeded);
    {
      // an inner, longer budget cannot extend the outer one
      DeadlineScope inner(std::chrono::hours(1));
      CHECK_THROWS_AS(buchberger(R, F), CostGuardExceeded);
    }
  }
  CHECK_NOTHROW(buchberger(R, F));
}
