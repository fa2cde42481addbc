#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "budgetagg/allocation.hpp"

namespace budgetagg {

// One vote per voter, each valid for the instance's (m, b). Immutable.
template <class Allocation>
class BasicProfile {
 public:
  BasicProfile(Instance instance, std::vector<Allocation> votes);

  const Instance& instance() const { return instance_; }
  const std::vector<Allocation>& votes() const { return votes_; }
  const Allocation& vote(std::size_t i) const { return votes_[i]; }
  std::size_t size() const { return votes_.size(); }

  // Copy with voter i's vote replaced.
  BasicProfile with_vote(std::size_t i, Allocation vote) const;

  friend bool operator==(const BasicProfile& a, const BasicProfile& b) {
    return a.instance_ == b.instance_ && a.votes_ == b.votes_;
  }

 private:
  Instance instance_;
  std::vector<Allocation> votes_;
};

using IntegralProfile = BasicProfile<IntegralAllocation>;
using FractionalProfile = BasicProfile<FractionalAllocation>;

extern template class BasicProfile<IntegralAllocation>;
extern template class BasicProfile<FractionalAllocation>;

inline bool operator<(const IntegralProfile& a, const IntegralProfile& b) {
  return a.votes() < b.votes();
}

FractionalProfile to_fractional(const IntegralProfile& profile);

// mu(P)_j = (1/n) sum_i p_{i,j}.
FractionalAllocation average(const IntegralProfile& profile);
FractionalAllocation average(const FractionalProfile& profile);

bool is_single_minded(const IntegralProfile& profile);
bool is_single_minded(const FractionalProfile& profile);

// Votes sorted ascending: the lexicographically smallest ordering of the multiset.
IntegralProfile canonicalize(const IntegralProfile& profile);

// Every profile of I_{n,m,b}, voter 0's vote varying slowest, in lexicographic order.
void for_each_profile(const Instance& inst, const std::function<void(const IntegralProfile&)>& fn);

// "0003 0030 2010"
std::string to_compact_string(const IntegralProfile& profile);

}  // namespace budgetagg
