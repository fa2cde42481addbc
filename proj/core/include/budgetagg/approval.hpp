#pragma once

#include <compare>
#include <set>
#include <vector>

#include "budgetagg/profile.hpp"

namespace budgetagg {

// Candidate c_{j,l}: the l-th unit (0-based) of alternative j (0-based).
struct Candidate {
  int alternative = 0;
  int unit = 0;
  friend auto operator<=>(const Candidate&, const Candidate&) = default;
};

using CandidateSet = std::set<Candidate>;

// Approval-committee view of an integral profile: b ordered candidates per
// alternative, voter i approving the first p_{i,j} of them, committee size b.
struct ApprovalElection {
  std::vector<Candidate> candidates;
  int committee_size = 0;
  std::vector<CandidateSet> ballots;
};

ApprovalElection to_approval(const IntegralProfile& profile);
CandidateSet allocation_to_committee(const IntegralAllocation& a);

// |A_i ∩ W|
int satisfaction(const CandidateSet& ballot, const CandidateSet& committee);

}  // namespace budgetagg
