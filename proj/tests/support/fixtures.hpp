// Profiles from the worked counterexamples, shared by unit and acceptance tests.
#pragma once

#include <vector>

#include "budgetagg/profile.hpp"

namespace fixtures {

using namespace budgetagg;

// n=10, m=6, b=8: five votes (8,0,...), then (7,1,0,...), (7,0,1,0,...), ... (7,0,...,1).
inline IntegralProfile hamilton_profile() {
  std::vector<IntegralAllocation> votes(5, IntegralAllocation{8, 0, 0, 0, 0, 0});
  for (int j = 1; j < 6; ++j) {
    std::vector<int> v(6, 0);
    v[0] = 7;
    v[j] = 1;
    votes.emplace_back(std::move(v));
  }
  return IntegralProfile(Instance(10, 6, 8), std::move(votes));
}

inline IntegralProfile quota_profile() {
  return IntegralProfile(Instance(4, 5, 4),
                         {{3, 1, 0, 0, 0}, {3, 0, 1, 0, 0}, {3, 0, 0, 1, 0}, {3, 0, 0, 0, 1}});
}

inline IntegralProfile divisor_profile() {
  return IntegralProfile(Instance(4, 4, 2), {{1, 1, 0, 0}, {1, 0, 1, 0}, {1, 0, 0, 1}, {1, 1, 0, 0}});
}

// Three voters on alternative 1, one on each other alternative.
inline IntegralProfile ceiling_profile() {
  return IntegralProfile(Instance(6, 4, 4), {{4, 0, 0, 0}, {4, 0, 0, 0}, {4, 0, 0, 0},
                                             {0, 4, 0, 0}, {0, 0, 4, 0}, {0, 0, 0, 4}});
}

// "0003 0030 2010"
inline IntegralProfile s032_profile() {
  return IntegralProfile(Instance(3, 4, 3), {{0, 0, 0, 3}, {0, 0, 3, 0}, {2, 0, 1, 0}});
}

inline IntegralProfile ejr_profile() {
  return IntegralProfile(Instance(3, 4, 3), {{1, 2, 0, 0}, {1, 0, 2, 0}, {1, 0, 0, 2}});
}

inline IntegralProfile ejr_misreport_profile() {
  return IntegralProfile(Instance(3, 4, 3), {{0, 3, 0, 0}, {1, 0, 2, 0}, {1, 0, 0, 2}});
}

inline std::vector<IntegralProfile> all_profiles(const Instance& inst) {
  std::vector<IntegralProfile> out;
  for_each_profile(inst, [&](const IntegralProfile& p) { out.push_back(p); });
  return out;
}

inline std::vector<IntegralProfile> single_minded_profiles(const Instance& inst) {
  std::vector<IntegralProfile> out;
  for_each_profile(inst, [&](const IntegralProfile& p) {
    if (is_single_minded(p)) out.push_back(p);
  });
  return out;
}

}  // namespace fixtures
