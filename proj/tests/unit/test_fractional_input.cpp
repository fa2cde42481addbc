#include <doctest.h>

#include <set>

#include "budgetagg/errors.hpp"
#include "budgetagg/fractional_input.hpp"
#include "budgetagg/integral_phantoms.hpp"

using namespace budgetagg;

namespace {

std::string compact(const std::vector<LinkedEntry>& order) {
  std::string s;
  for (const auto& e : order) s += (s.empty() ? "" : " ") + to_compact_string(e.allocation);
  return s;
}

}  // namespace

TEST_CASE("linked ordering is a bijection with distance-2 witnesses") {
  for (int m = 2; m <= 4; ++m) {
    for (int b = 1; b <= 4; ++b) {
      if ((m - 1) * b < 2) {
        CHECK_THROWS_AS(linked_order(m, b), InvalidInput);
        continue;
      }
      CAPTURE(m);
      CAPTURE(b);
      const auto order = linked_order(m, b);
      const auto all = enumerate_allocations(m, b);
      std::set<IntegralAllocation> got;
      for (const auto& e : order) got.insert(e.allocation);
      CHECK(got.size() == order.size());
      CHECK(got == std::set<IntegralAllocation>(all.begin(), all.end()));
      CHECK(order[0].witnesses.empty());
      for (std::size_t i = 1; i < order.size(); ++i) {
        const std::size_t want = (m == 2 || i == 1) ? 1 : 2;
        CHECK(order[i].witnesses.size() == want);
        std::set<int> distinct(order[i].witnesses.begin(), order[i].witnesses.end());
        CHECK(distinct.size() == order[i].witnesses.size());
        for (int w : order[i].witnesses) {
          CHECK(w >= 0);
          CHECK(w < static_cast<int>(i));
          CHECK(l1_distance(order[i].allocation, order[w].allocation) == 2);
        }
      }
    }
  }
}

TEST_CASE("linked orderings of small spaces") {
  CHECK(compact(linked_order(2, 2)) == "20 11 02");
  CHECK(compact(linked_order(4, 3)) ==
        "3000 2010 2100 1110 1200 0210 0300 1020 0120 0030 2001 1101 1011 0201 0111 0021 1002 0102 0012 0003");
}

TEST_CASE("snapping fractional votes") {
  const FractionalAllocation p(std::vector<Rat>{Rat(3, 2), Rat(1, 2), Rat(1)});
  CHECK(snap_to_integral(p) == IntegralAllocation{2, 0, 1});
  for (int m = 2; m <= 4; ++m) {
    for (const auto& x : enumerate_allocations(m, 3 * 6)) {
      std::vector<Rat> v;
      for (std::size_t j = 0; j < x.size(); ++j) v.emplace_back(x[j], 6);
      const FractionalAllocation a(v);
      const auto s = snap_to_integral(a);
      CHECK(s.budget() == 3);
      CHECK(l1_disutility(a, to_fractional(s)) <= Rat(m, 2));
      if (a.is_integral()) CHECK(s == to_integral(a));
    }
  }
}

TEST_CASE("snap wrapper on integral input is the wrapped mechanism") {
  const auto wrapped = snap_wrapper(floor_im);
  for_each_profile(Instance(2, 3, 2), [&](const IntegralProfile& p) {
    std::vector<FractionalAllocation> votes;
    for (const auto& v : p.votes()) votes.push_back(to_fractional(v));
    CHECK(wrapped(FractionalProfile(p.instance(), votes)) == floor_im(p));
  });
  const Instance inst(2, 3, 2);
  const FractionalProfile fp(inst, {FractionalAllocation(std::vector<Rat>{Rat(3, 2), Rat(1, 2), Rat(0)}),
                                    FractionalAllocation(std::vector<Rat>{Rat(0), Rat(1, 3), Rat(5, 3)})});
  CHECK(wrapped(fp) == floor_im(IntegralProfile(inst, {{2, 0, 0}, {0, 0, 2}})));
}
