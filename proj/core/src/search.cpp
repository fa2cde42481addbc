#include "budgetagg/search.hpp"

#include <map>
#include <string>

#include "budgetagg/errors.hpp"

namespace budgetagg {

namespace {

// Saturating product for budget checks.
std::int64_t mul(std::int64_t a, std::int64_t b) {
  if (a != 0 && b > INT64_MAX / a) return INT64_MAX;
  return a * b;
}

std::int64_t count_profiles(std::size_t allocations, int n) {
  std::int64_t total = 1;
  for (int i = 0; i < n; ++i) total = mul(total, static_cast<std::int64_t>(allocations));
  return total;
}

void check_budget(std::int64_t needed, std::int64_t max_evals, const Instance& inst) {
  if (needed > max_evals) {
    throw BudgetExceeded("instance " + to_string(inst) + " needs " + std::to_string(needed) +
                         " evaluations, budget is " + std::to_string(max_evals));
  }
}

// Mechanism outputs for every profile, indexed in for_each_profile order.
struct OutcomeTable {
  std::vector<IntegralAllocation> allocations;
  std::map<IntegralAllocation, std::size_t> index;
  std::vector<IntegralProfile> profiles;
  std::vector<IntegralAllocation> outputs;

  OutcomeTable(const IntegralMechanism& mech, const Instance& inst)
      : allocations(enumerate_allocations(inst.m(), inst.b())) {
    for (std::size_t k = 0; k < allocations.size(); ++k) index.emplace(allocations[k], k);
    for_each_profile(inst, [&](const IntegralProfile& p) {
      profiles.push_back(p);
      outputs.push_back(mech(p));
    });
  }

  std::size_t position(const IntegralProfile& p) const {
    std::size_t pos = 0;
    for (const auto& v : p.votes()) pos = pos * allocations.size() + index.at(v);
    return pos;
  }
};

std::optional<ManipulationWitness> scan_deviations(const IntegralProfile& profile,
                                                   const IntegralAllocation& honest,
                                                   const std::vector<IntegralAllocation>& allocations,
                                                   const auto& outcome_of) {
  for (std::size_t i = 0; i < profile.size(); ++i) {
    const auto& truth = profile.vote(i);
    const int before = l1_distance(truth, honest);
    if (before == 0) continue;
    for (const auto& lie : allocations) {
      if (lie == truth) continue;
      const auto deviant_profile = profile.with_vote(i, lie);
      IntegralAllocation deviant = outcome_of(deviant_profile);
      const int after = l1_distance(truth, deviant);
      if (after < before) {
        return ManipulationWitness{profile, static_cast<int>(i), lie, honest, std::move(deviant),
                                   Rat(before - after)};
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<ManipulationWitness> find_manipulation(const IntegralMechanism& mech,
                                                     const Instance& inst,
                                                     std::int64_t max_evals) {
  const auto size = enumerate_allocations(inst.m(), inst.b()).size();
  check_budget(mul(mul(count_profiles(size, inst.n()), inst.n()), size), max_evals, inst);
  const OutcomeTable table(mech, inst);
  for (std::size_t k = 0; k < table.profiles.size(); ++k) {
    auto w = scan_deviations(table.profiles[k], table.outputs[k], table.allocations,
                             [&](const IntegralProfile& q) { return table.outputs[table.position(q)]; });
    if (w) return w;
  }
  return std::nullopt;
}

std::optional<ManipulationWitness> find_manipulation_at(const IntegralMechanism& mech,
                                                        const IntegralProfile& profile) {
  const auto& inst = profile.instance();
  return scan_deviations(profile, mech(profile), enumerate_allocations(inst.m(), inst.b()), mech);
}

std::optional<std::pair<IntegralProfile, IntegralProfile>> check_anonymous(
    const IntegralMechanism& mech, const Instance& inst, std::int64_t max_evals) {
  const auto size = enumerate_allocations(inst.m(), inst.b()).size();
  check_budget(count_profiles(size, inst.n()), max_evals, inst);
  const OutcomeTable table(mech, inst);
  for (std::size_t k = 0; k < table.profiles.size(); ++k) {
    auto canonical = canonicalize(table.profiles[k]);
    if (table.outputs[table.position(canonical)] != table.outputs[k]) {
      return std::make_pair(table.profiles[k], std::move(canonical));
    }
  }
  return std::nullopt;
}

std::optional<IntegralAllocation> check_onto(const IntegralMechanism& mech, const Instance& inst,
                                             std::int64_t max_evals) {
  const auto size = enumerate_allocations(inst.m(), inst.b()).size();
  check_budget(count_profiles(size, inst.n()), max_evals, inst);
  const OutcomeTable table(mech, inst);
  std::vector<bool> hit(table.allocations.size(), false);
  for (const auto& out : table.outputs) hit[table.index.at(out)] = true;
  for (std::size_t k = 0; k < hit.size(); ++k) {
    if (!hit[k]) return table.allocations[k];
  }
  return std::nullopt;
}

std::optional<int> find_dictator(const IntegralMechanism& mech, const Instance& inst,
                                 std::int64_t max_evals) {
  const auto size = enumerate_allocations(inst.m(), inst.b()).size();
  check_budget(count_profiles(size, inst.n()), max_evals, inst);
  const OutcomeTable table(mech, inst);
  for (int i = 0; i < inst.n(); ++i) {
    bool always = true;
    for (std::size_t k = 0; k < table.profiles.size() && always; ++k) {
      always = l1_distance(table.profiles[k].vote(i), table.outputs[k]) == 0;
    }
    if (always) return i;
  }
  return std::nullopt;
}

}  // namespace budgetagg
