#include "budgetagg/axioms.hpp"

#include "budgetagg/errors.hpp"

namespace budgetagg {

namespace {

void require_match(const IntegralProfile& profile, const IntegralAllocation& a) {
  const auto& inst = profile.instance();
  if (a.size() != static_cast<std::size_t>(inst.m()) || a.budget() != inst.b()) {
    throw InvalidInput("allocation " + to_compact_string(a) + " does not fit instance " +
                       to_string(inst));
  }
}

bool represented(const IntegralAllocation& vote, const IntegralAllocation& a) {
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (a[j] > 0 && vote[j] > 0) return true;
  }
  return false;
}

int overlap(const IntegralAllocation& vote, const IntegralAllocation& a) {
  int s = 0;
  for (std::size_t j = 0; j < a.size(); ++j) s += std::min(vote[j], a[j]);
  return s;
}

}  // namespace

std::optional<JrViolation> check_jr(const IntegralProfile& profile, const IntegralAllocation& a) {
  require_match(profile, a);
  const int n = profile.instance().n();
  const int b = profile.instance().b();
  std::vector<bool> unrepresented(n);
  for (int i = 0; i < n; ++i) unrepresented[i] = !represented(profile.vote(i), a);

  for (int i = 0; i < n; ++i) {
    if (!unrepresented[i]) continue;
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (profile.vote(i)[j] == 0) continue;
      std::vector<int> group;
      for (int v = 0; v < n; ++v) {
        if (unrepresented[v] && profile.vote(v)[j] > 0) group.push_back(v);
      }
      if (static_cast<int>(group.size()) * b >= n) {
        return JrViolation{static_cast<int>(j), std::move(group)};
      }
    }
  }
  return std::nullopt;
}

std::vector<IntegralAllocation> jr_outcomes(const IntegralProfile& profile) {
  std::vector<IntegralAllocation> out;
  for (auto& a : enumerate_allocations(profile.instance().m(), profile.instance().b())) {
    if (!check_jr(profile, a)) out.push_back(std::move(a));
  }
  return out;
}

std::vector<EjrPlusViolation> ejr_plus_violations(const IntegralProfile& profile,
                                                  const IntegralAllocation& a) {
  require_match(profile, a);
  const int n = profile.instance().n();
  const int b = profile.instance().b();
  std::vector<int> cover(n);
  for (int i = 0; i < n; ++i) cover[i] = overlap(profile.vote(i), a);

  std::vector<EjrPlusViolation> out;
  for (std::size_t j = 0; j < a.size(); ++j) {
    for (int level = 1; level <= b; ++level) {
      std::vector<int> group;
      for (int i = 0; i < n; ++i) {
        if (profile.vote(i)[j] > a[j] && cover[i] < level) group.push_back(i);
      }
      if (!group.empty() && static_cast<int>(group.size()) * b >= level * n) {
        out.push_back({static_cast<int>(j), level, std::move(group)});
      }
    }
  }
  return out;
}

std::optional<EjrPlusViolation> check_ejr_plus(const IntegralProfile& profile,
                                               const IntegralAllocation& a) {
  auto all = ejr_plus_violations(profile, a);
  if (all.empty()) return std::nullopt;
  return std::move(all.front());
}

std::optional<int> check_range_respect(const IntegralProfile& profile, const IntegralAllocation& a) {
  require_match(profile, a);
  for (std::size_t j = 0; j < a.size(); ++j) {
    int lo = profile.vote(0)[j];
    int hi = lo;
    for (const auto& v : profile.votes()) {
      lo = std::min(lo, v[j]);
      hi = std::max(hi, v[j]);
    }
    if (a[j] < lo || a[j] > hi) return static_cast<int>(j);
  }
  return std::nullopt;
}

SmQuotaResult check_sm_quota_prop(const IntegralProfile& profile, const IntegralAllocation& a) {
  require_match(profile, a);
  if (!is_single_minded(profile)) return {false, std::nullopt};
  const auto mu = average(profile);
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (a[j] < floor_of(mu[j]) || a[j] > ceil_of(mu[j])) return {true, static_cast<int>(j)};
  }
  return {true, std::nullopt};
}

}  // namespace budgetagg
