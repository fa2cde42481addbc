#pragma once

#include <optional>
#include <vector>

#include "budgetagg/profile.hpp"

namespace budgetagg {

// Voter and alternative indices are 0-based throughout.

// A group of at least n/b voters who all support `alternative` and none of whom
// has any supported alternative funded.
struct JrViolation {
  int alternative;
  std::vector<int> voters;
  friend bool operator==(const JrViolation&, const JrViolation&) = default;
};

// First violation in scan order: voters ascending, then each voter's supported
// alternatives ascending. The group is every unrepresented supporter.
std::optional<JrViolation> check_jr(const IntegralProfile& profile, const IntegralAllocation& a);

// All allocations of I^m_b satisfying JR, ascending. May be empty.
std::vector<IntegralAllocation> jr_outcomes(const IntegralProfile& profile);

// At least l*n/b voters with p_ij > a_j whose overlap sum_j' min(p_ij', a_j') is below l.
struct EjrPlusViolation {
  int alternative;
  int level;
  std::vector<int> voters;
  friend bool operator==(const EjrPlusViolation&, const EjrPlusViolation&) = default;
};

// Scans alternatives ascending, then levels 1..b.
std::optional<EjrPlusViolation> check_ejr_plus(const IntegralProfile& profile,
                                               const IntegralAllocation& a);
std::vector<EjrPlusViolation> ejr_plus_violations(const IntegralProfile& profile,
                                                  const IntegralAllocation& a);

// First alternative with a_j outside [min_i p_ij, max_i p_ij].
std::optional<int> check_range_respect(const IntegralProfile& profile, const IntegralAllocation& a);

struct SmQuotaResult {
  bool applicable;              // false when the profile is not single-minded
  std::optional<int> violation; // first alternative with a_j outside {floor, ceil} of the average
};
SmQuotaResult check_sm_quota_prop(const IntegralProfile& profile, const IntegralAllocation& a);

}  // namespace budgetagg
