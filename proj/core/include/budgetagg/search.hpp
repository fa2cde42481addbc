#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "budgetagg/mechanism.hpp"

namespace budgetagg {

inline constexpr std::int64_t kDefaultMaxEvals = 10'000'000;

struct ManipulationWitness {
  IntegralProfile profile;
  int voter;  // 0-based
  IntegralAllocation misreport;
  IntegralAllocation honest_output;
  IntegralAllocation deviant_output;
  Rat gain;  // l1(p_i, honest) - l1(p_i, deviant) > 0
};

// Exhaustive truthfulness scan over every profile of `inst` and every single-voter
// misreport: profiles in for_each_profile order, then voters, then misreports
// ascending. Returns the first profitable deviation.
// Throws BudgetExceeded when |I|^n * n * |I| exceeds max_evals.
std::optional<ManipulationWitness> find_manipulation(const IntegralMechanism& mech,
                                                     const Instance& inst,
                                                     std::int64_t max_evals = kDefaultMaxEvals);

// Same scan restricted to deviations from one profile.
std::optional<ManipulationWitness> find_manipulation_at(const IntegralMechanism& mech,
                                                        const IntegralProfile& profile);

// First profile whose output differs from that of its canonical permutation,
// returned as (profile, canonical profile).
std::optional<std::pair<IntegralProfile, IntegralProfile>> check_anonymous(
    const IntegralMechanism& mech, const Instance& inst, std::int64_t max_evals = kDefaultMaxEvals);

// Smallest allocation of I^m_b never returned on an integral profile.
std::optional<IntegralAllocation> check_onto(const IntegralMechanism& mech, const Instance& inst,
                                             std::int64_t max_evals = kDefaultMaxEvals);

// Lowest voter whose vote is always l1-closest (ties allowed) to the output.
// Votes lie in I^m_b, so that means the output always equals the vote.
std::optional<int> find_dictator(const IntegralMechanism& mech, const Instance& inst,
                                 std::int64_t max_evals = kDefaultMaxEvals);

}  // namespace budgetagg
