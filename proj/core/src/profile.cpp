#include "budgetagg/profile.hpp"

#include <algorithm>

#include "budgetagg/errors.hpp"

namespace budgetagg {

template <class Allocation>
BasicProfile<Allocation>::BasicProfile(Instance instance, std::vector<Allocation> votes)
    : instance_(instance), votes_(std::move(votes)) {
  if (votes_.size() != static_cast<std::size_t>(instance_.n())) {
    throw InvalidInput("expected " + std::to_string(instance_.n()) + " votes, got " +
                       std::to_string(votes_.size()));
  }
  for (std::size_t i = 0; i < votes_.size(); ++i) {
    const auto& v = votes_[i];
    if (v.size() != static_cast<std::size_t>(instance_.m())) {
      throw InvalidInput("vote of voter " + std::to_string(i + 1) + " has " +
                         std::to_string(v.size()) + " amounts, expected " +
                         std::to_string(instance_.m()));
    }
    if (Rat(v.budget()) != Rat(instance_.b())) {
      throw InvalidInput("vote of voter " + std::to_string(i + 1) + " sums to " +
                         to_string(Rat(v.budget())) + ", expected " +
                         std::to_string(instance_.b()));
    }
  }
}

template <class Allocation>
BasicProfile<Allocation> BasicProfile<Allocation>::with_vote(std::size_t i, Allocation vote) const {
  auto votes = votes_;
  votes.at(i) = std::move(vote);
  return BasicProfile(instance_, std::move(votes));
}

template class BasicProfile<IntegralAllocation>;
template class BasicProfile<FractionalAllocation>;

FractionalProfile to_fractional(const IntegralProfile& profile) {
  std::vector<FractionalAllocation> votes;
  votes.reserve(profile.size());
  for (const auto& v : profile.votes()) votes.push_back(to_fractional(v));
  return FractionalProfile(profile.instance(), std::move(votes));
}

namespace {

template <class Profile>
FractionalAllocation average_impl(const Profile& profile) {
  const auto& inst = profile.instance();
  std::vector<Rat> sums(inst.m(), Rat(0));
  for (const auto& v : profile.votes()) {
    for (int j = 0; j < inst.m(); ++j) sums[j] += Rat(v[j]);
  }
  for (auto& s : sums) s /= inst.n();
  return FractionalAllocation(std::move(sums));
}

template <class Profile>
bool single_minded_impl(const Profile& profile) {
  const Rat b(profile.instance().b());
  return std::all_of(profile.votes().begin(), profile.votes().end(), [&](const auto& v) {
    return std::any_of(v.begin(), v.end(), [&](const auto& x) { return Rat(x) == b; });
  });
}

}  // namespace

FractionalAllocation average(const IntegralProfile& profile) { return average_impl(profile); }
FractionalAllocation average(const FractionalProfile& profile) { return average_impl(profile); }

bool is_single_minded(const IntegralProfile& profile) { return single_minded_impl(profile); }
bool is_single_minded(const FractionalProfile& profile) { return single_minded_impl(profile); }

IntegralProfile canonicalize(const IntegralProfile& profile) {
  auto votes = profile.votes();
  std::sort(votes.begin(), votes.end());
  return IntegralProfile(profile.instance(), std::move(votes));
}

void for_each_profile(const Instance& inst,
                      const std::function<void(const IntegralProfile&)>& fn) {
  const auto all = enumerate_allocations(inst.m(), inst.b());
  std::vector<std::size_t> idx(inst.n(), 0);
  std::vector<IntegralAllocation> votes(inst.n(), all.front());
  while (true) {
    for (int i = 0; i < inst.n(); ++i) votes[i] = all[idx[i]];
    fn(IntegralProfile(inst, votes));
    int pos = inst.n() - 1;
    while (pos >= 0 && ++idx[pos] == all.size()) {
      idx[pos] = 0;
      --pos;
    }
    if (pos < 0) break;
  }
}

std::string to_compact_string(const IntegralProfile& profile) {
  std::string out;
  for (std::size_t i = 0; i < profile.size(); ++i) {
    if (i) out.push_back(' ');
    out += to_compact_string(profile.vote(i));
  }
  return out;
}

}  // namespace budgetagg
