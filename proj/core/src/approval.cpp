#include "budgetagg/approval.hpp"

#include <algorithm>
#include <iterator>

namespace budgetagg {

CandidateSet allocation_to_committee(const IntegralAllocation& a) {
  CandidateSet out;
  for (std::size_t j = 0; j < a.size(); ++j) {
    for (int unit = 0; unit < a[j]; ++unit) out.insert({static_cast<int>(j), unit});
  }
  return out;
}

ApprovalElection to_approval(const IntegralProfile& profile) {
  const auto& inst = profile.instance();
  ApprovalElection election;
  election.committee_size = inst.b();
  for (int j = 0; j < inst.m(); ++j) {
    for (int unit = 0; unit < inst.b(); ++unit) election.candidates.push_back({j, unit});
  }
  for (const auto& vote : profile.votes()) election.ballots.push_back(allocation_to_committee(vote));
  return election;
}

int satisfaction(const CandidateSet& ballot, const CandidateSet& committee) {
  int count = 0;
  for (const auto& c : ballot) count += static_cast<int>(committee.count(c));
  return count;
}

}  // namespace budgetagg
