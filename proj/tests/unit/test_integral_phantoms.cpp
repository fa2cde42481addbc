#include <doctest.h>

#include "budgetagg/errors.hpp"
#include "budgetagg/integral_phantoms.hpp"
#include "fixtures.hpp"

using namespace budgetagg;

namespace {

// Index of the first group of m events belonging to `phantom` that lifts it to `level`.
std::size_t group_index(const IntegralPhantomSchedule& s, int phantom, int level) {
  const auto m = static_cast<std::size_t>(s.alternatives());
  int seen = 0;
  for (std::size_t g = 0; g * m < s.events().size(); ++g) {
    if (s.events()[g * m].phantom == phantom && ++seen == level) return g;
  }
  return static_cast<std::size_t>(-1);
}

// Moves each phantom up to `target` one unit at a time, phantom by phantom.
std::vector<PhantomMove> moves_to(const std::vector<std::vector<int>>& target,
                                  std::vector<std::vector<int>>& at) {
  std::vector<PhantomMove> out;
  for (std::size_t k = 0; k < target.size(); ++k) {
    for (std::size_t j = 0; j < target[k].size(); ++j) {
      while (at[k][j] < target[k][j]) {
        out.push_back({static_cast<int>(k), static_cast<int>(j)});
        ++at[k][j];
      }
    }
  }
  return out;
}

}  // namespace

TEST_CASE("rounding functions") {
  const auto fl = RoundingFn::floor();
  const auto ce = RoundingFn::ceiling();
  const RoundingFn half(Rat(1, 2));
  CHECK(fl(Rat(5, 2)) == 2);
  CHECK(ce(Rat(5, 2)) == 3);
  CHECK(half(Rat(5, 2)) == 2);
  CHECK(half(Rat(13, 5)) == 3);
  CHECK(fl(Rat(3)) == 3);
  CHECK(ce(Rat(3)) == 3);
  CHECK_THROWS_AS(RoundingFn(Rat(3, 2)), InvalidInput);

  // monotone, and once x rounds up so does everything between x and ceil(x)
  for (const auto& r : {fl, ce, half, RoundingFn(Rat(1, 3))}) {
    for (int x = 0; x < 36; ++x) {
      CHECK(r(Rat(x, 12)) <= r(Rat(x + 1, 12)));
      const Rat v(x, 12);
      if (r(v) == ceil_of(v) && !is_integer(v)) {
        for (int y = x + 1; Rat(y, 12) <= ceil_of(v); ++y) CHECK(r(Rat(y, 12)) == ceil_of(v));
      }
    }
  }
}

TEST_CASE("change times on a linear phantom") {
  const auto f = independent_markets(2, 4).phantom(0);  // 8t, capped at 4
  CHECK(RoundingFn::floor().first_time_at_level(f, 3) == Rat(3, 8));
  CHECK(RoundingFn::ceiling().first_time_at_level(f, 3) == Rat(1, 4));
  CHECK(RoundingFn(Rat(1, 2)).first_time_at_level(f, 1) == Rat(1, 16));
  CHECK_THROWS_AS(RoundingFn::floor().first_time_at_level(f, 5), ConstructionError);
}

TEST_CASE("flat segment at a threshold: change time is where the rounded value is first attained") {
  const PiecewisePhantom f({{Rat(0), Rat(0)}, {Rat(1, 4), Rat(1)}, {Rat(1, 2), Rat(1)}, {Rat(1), Rat(3)}});
  // floor reaches 1 at t = 1/4; the ceiling stays at 1 until the flat part ends at 1/2
  CHECK(RoundingFn::floor().first_time_at_level(f, 1) == Rat(1, 4));
  CHECK(RoundingFn::ceiling().first_time_at_level(f, 2) == Rat(1, 2));
}

TEST_CASE("schedule construction from independent markets") {
  const auto s = build_schedule(independent_markets(2, 4), RoundingFn::floor(), 3);
  CHECK(s.horizon() == 36);
  CHECK(s.events().size() % 3 == 0);
  // each rounded change moves one phantom on alternatives 1..m in order
  for (std::size_t g = 0; g * 3 < s.events().size(); ++g) {
    for (int j = 0; j < 3; ++j) {
      CHECK(s.events()[g * 3 + j].phantom == s.events()[g * 3].phantom);
      CHECK(s.events()[g * 3 + j].alternative == j);
    }
  }
  CHECK(group_index(s, 0, 3) != static_cast<std::size_t>(-1));
  // f_0 = 8t and f_1 = 4t cross 2 and 1 together at t = 1/4: lower k first
  CHECK(group_index(s, 0, 2) + 1 == group_index(s, 1, 1));
  for (int j = 0; j < 3; ++j) {
    CHECK(s.final_position(0, j) == 4);
    CHECK(s.final_position(1, j) == 4);
    CHECK(s.final_position(2, j) == 0);
  }
  CHECK(s.reaches_quota_bounds());
}

TEST_CASE("final positions match the rounded final phantom values") {
  for (const auto& [n, b] : std::vector<std::pair<int, int>>{{2, 3}, {3, 4}, {4, 2}}) {
    const auto capped = upper_quota_cap(independent_markets(n, b));
    const auto util = utilitarian(n, b);
    const auto sc = build_schedule(capped, RoundingFn::floor(), 2);
    const auto su = build_schedule(util, RoundingFn::floor(), 2);
    for (int k = 0; k <= n; ++k) {
      CHECK(sc.final_position(k, 0) == ceil_of(Rat(b * (n - k), n)));
      CHECK(su.final_position(k, 1) == RoundingFn::floor()(util.phantom(k).final_value()));
      CHECK(su.final_position(k, 1) >= floor_of(Rat(b * (n - k), n)));
    }
  }
}

TEST_CASE("schedule validation") {
  CHECK_THROWS_AS(IntegralPhantomSchedule(1, 2, 1, {{0, 0}, {0, 0}}), InvalidSchedule);
  CHECK_THROWS_AS(IntegralPhantomSchedule(1, 2, 1, {{2, 0}}), InvalidSchedule);
  CHECK_THROWS_AS(IntegralPhantomSchedule(1, 2, 1, {{0, 2}}), InvalidSchedule);
  std::vector<PhantomMove> too_many(5, PhantomMove{0, 0});
  CHECK_THROWS_AS(IntegralPhantomSchedule(1, 2, 1, too_many), ConstructionError);

  const IntegralProfile p(Instance(1, 2, 1), {{1, 0}});
  const IntegralPhantomSchedule idle(1, 2, 1, {});
  CHECK_FALSE(idle.reaches_quota_bounds());
  CHECK_THROWS_AS(evaluate_integral(p, idle), InvalidSchedule);
  const IntegralPhantomSchedule wrong(2, 2, 1, {{0, 0}, {0, 1}});
  CHECK_THROWS_AS(evaluate_integral(p, wrong), InvalidInput);
}

TEST_CASE("hand-placed phantom positions give (2,1,1)") {
  const IntegralProfile p(Instance(2, 3, 4), {{4, 0, 0}, {3, 1, 0}});
  std::vector<std::vector<int>> at(3, std::vector<int>(3, 0));
  auto events = moves_to({{2, 4, 3}, {1, 3, 2}, {0, 0, 1}}, at);
  const int placed_step = static_cast<int>(events.size());
  const auto rest = moves_to({{4, 4, 4}, {2, 3, 2}, {0, 0, 1}}, at);
  events.insert(events.end(), rest.begin(), rest.end());
  const IntegralPhantomSchedule s(2, 3, 4, events);
  CHECK(s.position(0, 1, placed_step) == 4);
  CHECK(s.position(2, 2, placed_step) == 1);
  CHECK(medians_at(p, s, placed_step) == std::vector<int>{2, 1, 1});
  const auto e = evaluate_integral(p, s);
  CHECK(e.medians == IntegralAllocation{2, 1, 1});
  CHECK(e.tau_star <= placed_step);
}

TEST_CASE("FloorIM and FloorUtil on small profiles") {
  const IntegralProfile unanimous(Instance(3, 3, 4), {{4, 0, 0}, {4, 0, 0}, {4, 0, 0}});
  CHECK(floor_im(unanimous) == IntegralAllocation{4, 0, 0});

  const auto sec4 = floor_im(fixtures::ceiling_profile());
  CHECK(sec4[0] == 2);
  for (std::size_t j = 1; j < 4; ++j) CHECK(sec4[j] <= 1);
  CHECK(ceiling_im(fixtures::ceiling_profile()) == IntegralAllocation{1, 1, 1, 1});

  // golden: the construction's deterministic choice on this tie
  const IntegralProfile split(Instance(2, 4, 2), {{1, 1, 0, 0}, {0, 0, 1, 1}});
  CHECK(floor_im(split) == IntegralAllocation{1, 1, 0, 0});

  for (const auto& v : enumerate_allocations(3, 3)) {
    CHECK(floor_util(IntegralProfile(Instance(1, 3, 3), {v})) == v);
    CHECK(floor_util(IntegralProfile(Instance(3, 3, 3), {v, v, v})) == v);
    CHECK(floor_im(IntegralProfile(Instance(1, 3, 3), {v})) == v);
  }
}

TEST_CASE("median sums move by at most one per step and the output is constant once normalized") {
  for (const Instance inst : {Instance(2, 3, 2), Instance(3, 2, 3), Instance(2, 2, 3)}) {
    const auto schedules = {
        build_schedule(upper_quota_cap(independent_markets(inst.n(), inst.b())), RoundingFn::floor(), inst.m()),
        build_schedule(utilitarian(inst.n(), inst.b()), RoundingFn::floor(), inst.m()),
        build_schedule(upper_quota_cap(independent_markets(inst.n(), inst.b())), RoundingFn::ceiling(), inst.m()),
        build_schedule(independent_markets(inst.n(), inst.b()), RoundingFn(Rat(1, 2)), inst.m())};
    for (const auto& s : schedules) {
      for (const auto& p : fixtures::all_profiles(inst)) {
        const auto trace = median_sum_trace(p, s);
        CHECK(trace.front() == 0);
        CHECK(trace.back() >= inst.b());
        int first = -1;
        int last = -1;
        for (std::size_t t = 1; t < trace.size(); ++t) {
          CHECK(trace[t] >= trace[t - 1]);
          CHECK(trace[t] - trace[t - 1] <= 1);
        }
        for (std::size_t t = 0; t < trace.size(); ++t) {
          if (trace[t] == inst.b()) {
            if (first < 0) first = static_cast<int>(t);
            last = static_cast<int>(t);
          }
        }
        REQUIRE(first >= 0);
        CHECK(medians_at(p, s, first) == medians_at(p, s, last));
        const auto e = evaluate_integral(p, s);
        CHECK(e.tau_star == first);
        CHECK(e.medians.vector() == medians_at(p, s, last));
      }
    }
  }
}
