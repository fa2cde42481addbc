#include <doctest.h>

#include "budgetagg/errors.hpp"
#include "budgetagg/phantom_system.hpp"
#include "fixtures.hpp"

using namespace budgetagg;

namespace {

Rat cost(const FractionalProfile& p, const FractionalAllocation& x) {
  Rat total(0);
  for (const auto& v : p.votes()) total += l1_disutility(v, x);
  return total;
}

// All allocations of S^m_b whose amounts are multiples of 1/den.
std::vector<FractionalAllocation> grid(int m, int b, int den) {
  std::vector<FractionalAllocation> out;
  for (const auto& units : enumerate_allocations(m, b * den)) {
    std::vector<Rat> x;
    for (int u : units) x.emplace_back(u, den);
    out.emplace_back(std::move(x));
  }
  return out;
}

}  // namespace

TEST_CASE("piecewise phantoms validate and interpolate") {
  const PiecewisePhantom f({{Rat(0), Rat(0)}, {Rat(1, 4), Rat(2)}, {Rat(1), Rat(2)}});
  CHECK(f(Rat(1, 8)) == Rat(1));
  CHECK(f(Rat(1, 2)) == Rat(2));
  CHECK(f.final_value() == Rat(2));
  CHECK_THROWS_AS(f(Rat(2)), InvalidInput);
  CHECK_THROWS_AS(PiecewisePhantom({{Rat(0), Rat(1)}, {Rat(1), Rat(1)}}), InvalidInput);
  CHECK_THROWS_AS(PiecewisePhantom({{Rat(0), Rat(0)}, {Rat(1, 2), Rat(0)}}), InvalidInput);
  CHECK_THROWS_AS(PiecewisePhantom({{Rat(0), Rat(0)}, {Rat(1, 2), Rat(2)}, {Rat(1), Rat(1)}}), InvalidInput);
  CHECK(PiecewisePhantom::zero()(Rat(1)) == Rat(0));
}

TEST_CASE("independent markets") {
  const auto f = independent_markets(2, 4);
  CHECK(f.phantom(0)(Rat(1, 4)) == Rat(2));
  CHECK(f.phantom(1)(Rat(1, 4)) == Rat(1));
  CHECK(f.phantom(2)(Rat(1, 4)) == Rat(0));
  CHECK(f.phantom(1)(Rat(1)) == Rat(4));
  const auto wide = independent_markets(5, 3);
  for (const auto& g : wide.phantoms()) CHECK(g(Rat(0)) == Rat(0));
  // kink at t = 1/(n-k)
  const auto h = independent_markets(10, 8);
  CHECK(h.phantom(3).breakpoints()[1].t == Rat(1, 7));
  CHECK(h.meets_normalization_bound());
}

TEST_CASE("utilitarian") {
  const auto f = utilitarian(2, 4);
  CHECK(f.phantom(0)(Rat(1, 4)) == Rat(2));
  CHECK(f.phantom(1)(Rat(1, 4)) == Rat(0));
  CHECK(f.phantom(0)(Rat(1, 2)) == Rat(4));
  CHECK(f.phantom(1)(Rat(3, 4)) == Rat(2));
  CHECK(utilitarian(5, 3).phantom(0)(Rat(1, 5)) == Rat(3));
  CHECK(f.meets_normalization_bound());
}

TEST_CASE("utilitarian minimizes total l1 disutility on I_{2,2,2}") {
  const auto candidates = grid(2, 2, 12);
  for (const auto& p : fixtures::all_profiles(Instance(2, 2, 2))) {
    const auto fp = to_fractional(p);
    Rat best = cost(fp, candidates.front());
    for (const auto& x : candidates) best = std::min(best, cost(fp, x));
    CHECK(cost(fp, utilitarian_mechanism(fp)) == best);
  }
}

TEST_CASE("upper-quota capping") {
  const auto capped = upper_quota_cap(independent_markets(3, 4));
  CHECK(capped.phantom(0).final_value() == Rat(4));
  CHECK(capped.phantom(1).final_value() == Rat(3));
  CHECK(capped.phantom(2).final_value() == Rat(2));
  CHECK(capped.phantom(3).final_value() == Rat(0));
  CHECK(upper_quota_cap(capped) == capped);

  // A system that stops short of its cap is extended first.
  std::vector<PiecewisePhantom> short_of_cap{
      PiecewisePhantom({{Rat(0), Rat(0)}, {Rat(1), Rat(3)}}),
      PiecewisePhantom({{Rat(0), Rat(0)}, {Rat(1), Rat(1)}}),
      PiecewisePhantom::zero()};
  const auto extended = upper_quota_cap(PhantomSystem(2, 3, short_of_cap));
  CHECK(extended.phantom(0)(Rat(1, 2)) == Rat(3));
  CHECK(extended.phantom(1)(Rat(1, 2)) == Rat(1));
  CHECK(extended.phantom(1).final_value() == Rat(2));
  CHECK(extended.phantom(0).final_value() == Rat(3));
  CHECK(extended.meets_normalization_bound());

  for (const Instance inst : {Instance(2, 2, 2), Instance(3, 2, 2)}) {
    const auto plain = independent_markets(inst.n(), inst.b());
    const auto cap = upper_quota_cap(plain);
    for (const auto& p : fixtures::all_profiles(inst)) {
      const auto fp = to_fractional(p);
      CHECK(evaluate_fractional(fp, plain).medians == evaluate_fractional(fp, cap).medians);
    }
  }
}

TEST_CASE("evaluation on the worked profiles") {
  const auto h = evaluate_fractional(to_fractional(fixtures::hamilton_profile()), independent_markets(10, 8));
  const Rat e(8, 15);
  CHECK(h.medians == FractionalAllocation({Rat(80, 15), e, e, e, e, e}));
  CHECK(h.t_star == Rat(1, 15));

  const auto d = evaluate_fractional(to_fractional(fixtures::divisor_profile()), independent_markets(4, 2));
  CHECK(d.medians == FractionalAllocation({Rat(1), Rat(1, 2), Rat(1, 4), Rat(1, 4)}));
  CHECK(d.t_star == Rat(1, 8));

  const auto lie = fixtures::divisor_profile().with_vote(3, {0, 2, 0, 0});
  const auto dl = evaluate_fractional(to_fractional(lie), independent_markets(4, 2));
  CHECK(dl.medians == FractionalAllocation({Rat(6, 7), Rat(4, 7), Rat(2, 7), Rat(2, 7)}));
  CHECK(dl.t_star == Rat(1, 7));
}

TEST_CASE("evaluation rejects mismatched or weak systems") {
  const auto fp = to_fractional(fixtures::divisor_profile());
  CHECK_THROWS_AS(evaluate_fractional(fp, independent_markets(3, 2)), InvalidInput);
  std::vector<PiecewisePhantom> weak(5, PiecewisePhantom::zero());
  CHECK_THROWS_AS(evaluate_fractional(fp, PhantomSystem(4, 2, weak)), InvalidSystem);
}

TEST_CASE("median sum is monotone and the output is constant on the normalization interval") {
  std::vector<Rat> ts;
  for (int k = 0; k <= 48; ++k) ts.emplace_back(k, 48);
  for (const Instance inst : {Instance(2, 3, 2), Instance(3, 2, 3)}) {
    for (const auto& system : {independent_markets(inst.n(), inst.b()), utilitarian(inst.n(), inst.b())}) {
      for (const auto& p : fixtures::all_profiles(inst)) {
        const auto fp = to_fractional(p);
        Rat prev(-1);
        for (const auto& t : ts) {
          Rat sum(0);
          for (const auto& x : medians_at(fp, system, t)) sum += x;
          CHECK(sum >= prev);
          prev = sum;
        }
        const auto [lo, hi] = normalization_interval(fp, system);
        CHECK(lo <= hi);
        const auto at_lo = medians_at(fp, system, lo);
        CHECK(at_lo == medians_at(fp, system, hi));
        CHECK(evaluate_fractional(fp, system).t_star == lo);
      }
    }
  }
}

TEST_CASE("independent markets returns the average on single-minded profiles") {
  for (int n = 1; n <= 3; ++n) {
    for (int m = 2; m <= 3; ++m) {
      for (int b = 1; b <= 3; ++b) {
        for (const auto& p : fixtures::single_minded_profiles(Instance(n, m, b))) {
          CHECK(independent_markets_mechanism(to_fractional(p)) == average(p));
        }
      }
    }
  }
}

TEST_CASE("fractional moving-phantom mechanisms admit no profitable integral misreport") {
  for (const Instance inst : {Instance(2, 2, 2), Instance(2, 2, 3), Instance(3, 2, 2)}) {
    const auto votes = enumerate_allocations(inst.m(), inst.b());
    for (const auto& mech : {FractionalMechanism(independent_markets_mechanism),
                             FractionalMechanism(utilitarian_mechanism)}) {
      for (const auto& p : fixtures::all_profiles(inst)) {
        const auto honest = mech(to_fractional(p));
        for (std::size_t i = 0; i < p.size(); ++i) {
          const auto before = l1_disutility(p.vote(i), honest);
          for (const auto& lie : votes) {
            CHECK(l1_disutility(p.vote(i), mech(to_fractional(p.with_vote(i, lie)))) >= before);
          }
        }
      }
    }
  }
}
