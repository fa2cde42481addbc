#include <doctest.h>

#include "budgetagg/apportionment.hpp"
#include "budgetagg/errors.hpp"
#include "budgetagg/integral_phantoms.hpp"
#include "budgetagg/phantom_system.hpp"
#include "budgetagg/search.hpp"
#include "fixtures.hpp"

using namespace budgetagg;

namespace {

IntegralAllocation corner(int m, int b) {
  std::vector<int> v(m, 0);
  v[0] = b;
  return IntegralAllocation(std::move(v));
}

// Voter 1 gets their way by reporting everything on alternative 1; otherwise voter 2 decides.
IntegralAllocation whoever_shouts(const IntegralProfile& p) {
  const auto& inst = p.instance();
  return p.vote(0)[0] == inst.b() ? p.vote(0) : p.vote(1);
}

// Same scan order as the library, written out plainly.
std::optional<ManipulationWitness> first_witness(const IntegralMechanism& mech, const Instance& inst) {
  for (const auto& p : fixtures::all_profiles(inst)) {
    const auto honest = mech(p);
    for (int i = 0; i < inst.n(); ++i) {
      for (const auto& lie : enumerate_allocations(inst.m(), inst.b())) {
        const auto dev = mech(p.with_vote(i, lie));
        const Rat gain = l1_disutility(p.vote(i), honest) - l1_disutility(p.vote(i), dev);
        if (gain > 0) return ManipulationWitness{p, i, lie, honest, dev, gain};
      }
    }
  }
  return std::nullopt;
}

void check_witness(const IntegralMechanism& mech, const ManipulationWitness& w) {
  CHECK(mech(w.profile) == w.honest_output);
  CHECK(mech(w.profile.with_vote(w.voter, w.misreport)) == w.deviant_output);
  const auto& truth = w.profile.vote(w.voter);
  CHECK(w.gain == l1_disutility(truth, w.honest_output) - l1_disutility(truth, w.deviant_output));
  CHECK(w.gain > 0);
}

}  // namespace

TEST_CASE("no manipulation for the integral phantom mechanisms on small instances") {
  for (const Instance inst : {Instance(2, 2, 3), Instance(2, 3, 2), Instance(3, 2, 2)}) {
    CHECK_FALSE(find_manipulation(floor_im, inst));
    CHECK_FALSE(find_manipulation(floor_util, inst));
    CHECK_FALSE(find_manipulation(ceiling_im, inst));
  }
}

TEST_CASE("the first manipulation found matches a plain scan") {
  // with two alternatives and b = 2 every misreport lands at distance 2 at best
  CHECK_FALSE(find_manipulation(whoever_shouts, Instance(2, 2, 2)));
  for (const Instance inst : {Instance(2, 2, 3), Instance(2, 3, 2), Instance(3, 2, 3)}) {
    const auto w = find_manipulation(whoever_shouts, inst);
    const auto o = first_witness(whoever_shouts, inst);
    REQUIRE(w);
    REQUIRE(o);
    CHECK(w->profile == o->profile);
    CHECK(w->voter == o->voter);
    CHECK(w->misreport == o->misreport);
    CHECK(w->gain == o->gain);
    check_witness(whoever_shouts, *w);
  }
}

TEST_CASE("manipulation of IM followed by index-tie-broken Hamilton") {
  const auto mech = compose(independent_markets_mechanism, hamilton, TieBreakPolicy::ByAlternativeIndex);
  const auto p = fixtures::hamilton_profile();
  CHECK(mech(p) == IntegralAllocation{5, 1, 1, 1, 0, 0});
  const auto w = find_manipulation_at(mech, p);
  REQUIRE(w);
  check_witness(mech, *w);
  CHECK(w->voter == 8);
  CHECK(w->misreport == corner(6, 8));
  CHECK(w->gain == 2);
  // the deviation from the worked example is profitable too
  const auto dev = mech(p.with_vote(9, corner(6, 8)));
  CHECK(l1_disutility(p.vote(9), dev) < l1_disutility(p.vote(9), mech(p)));
}

TEST_CASE("manipulation of IM followed by the quota method") {
  const auto mech = compose(independent_markets_mechanism, quota_method, TieBreakPolicy::ByAlternativeIndex);
  const auto w = find_manipulation_at(mech, fixtures::quota_profile());
  REQUIRE(w);
  check_witness(mech, *w);
}

TEST_CASE("dictatorship, onto and anonymity") {
  const auto first_vote = [](const IntegralProfile& p) { return p.vote(0); };
  const auto last_vote = [](const IntegralProfile& p) { return p.vote(p.instance().n() - 1); };
  const auto constant = [](const IntegralProfile& p) { return corner(p.instance().m(), p.instance().b()); };

  const Instance inst(2, 2, 2);
  CHECK(find_dictator(first_vote, inst) == 0);
  CHECK(find_dictator(last_vote, inst) == 1);
  CHECK_FALSE(find_dictator(floor_im, inst));
  CHECK_FALSE(find_dictator(constant, inst));

  CHECK_FALSE(check_onto(floor_im, inst));
  CHECK_FALSE(check_onto(first_vote, inst));
  CHECK(check_onto(constant, inst) == IntegralAllocation{0, 2});

  for (const Instance i2 : {Instance(2, 2, 3), Instance(3, 2, 2), Instance(3, 3, 2)}) {
    CHECK_FALSE(check_anonymous(floor_im, i2));
    CHECK_FALSE(check_anonymous(ceiling_im, i2));
    CHECK_FALSE(check_anonymous(floor_util, i2));
  }
  const auto a = check_anonymous(first_vote, inst);
  REQUIRE(a);
  CHECK(canonicalize(a->first) == a->second);
  CHECK(first_vote(a->first) != first_vote(a->second));
}

TEST_CASE("exhaustive searches refuse oversized instances") {
  const Instance big(10, 6, 8);
  CHECK_THROWS_AS(find_manipulation(floor_im, big), BudgetExceeded);
  CHECK_THROWS_AS(check_onto(floor_im, big), BudgetExceeded);
  CHECK_THROWS_AS(check_anonymous(floor_im, big), BudgetExceeded);
  CHECK_THROWS_AS(find_dictator(floor_im, big), BudgetExceeded);
  CHECK_THROWS_AS(find_manipulation(floor_im, Instance(2, 2, 2), 10), BudgetExceeded);
  CHECK_NOTHROW(find_manipulation(floor_im, Instance(2, 2, 2), 3 * 3 * 2 * 3));
}
