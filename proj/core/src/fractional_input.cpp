#include "budgetagg/fractional_input.hpp"

#include <map>
#include <string>

#include "budgetagg/apportionment.hpp"
#include "budgetagg/errors.hpp"

namespace budgetagg {

namespace {

// All length-`len` non-negative vectors summing to `total`, descending lexicographic.
void descending(int len, int total, std::vector<int>& prefix, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(prefix.size()) == len - 1) {
    prefix.push_back(total);
    out.push_back(prefix);
    prefix.pop_back();
    return;
  }
  for (int x = total; x >= 0; --x) {
    prefix.push_back(x);
    descending(len, total - x, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<LinkedEntry> linked_order(int m, int b) {
  if (m < 2 || b < 1 || (m - 1) * b < 2) {
    throw InvalidInput("linked ordering needs (m - 1) * b >= 2, got m=" + std::to_string(m) +
                       ", b=" + std::to_string(b));
  }
  std::vector<LinkedEntry> out;
  std::map<std::vector<int>, int> where;
  auto add = [&](std::vector<int> x, std::vector<int> witnesses) {
    where.emplace(x, static_cast<int>(out.size()));
    out.push_back({IntegralAllocation(std::move(x)), std::move(witnesses)});
  };
  auto at = [&](const std::vector<int>& x) { return where.at(x); };

  if (m == 2) {
    for (int x = b; x >= 0; --x) {
      std::vector<int> w;
      if (x < b) w.push_back(static_cast<int>(out.size()) - 1);
      add({x, b - x}, std::move(w));
    }
    return out;
  }

  auto zeros = [&] { return std::vector<int>(m, 0); };

  // phase 1
  for (int first = b; first >= 0; --first) {
    auto x = zeros();
    x[0] = first;
    x[1] = b - first;
    std::vector<int> w;
    if (first < b) {
      const int last = static_cast<int>(out.size()) - 1;
      w = {last - 1, last};
    }
    add(std::move(x), std::move(w));
    if (first == 0) break;
    auto y = zeros();
    y[0] = first - 1;
    y[1] = b - first;
    y[2] = 1;
    const int last = static_cast<int>(out.size()) - 1;
    add(std::move(y), first == b ? std::vector<int>{last} : std::vector<int>{last - 1, last});
  }

  // phases 2 and 3: x with a_j = c gets witnesses x + e_1 - e_j and x + e_2 - e_j
  for (int j = 2; j < m; ++j) {
    for (int c = (j == 2 ? 2 : 1); c <= b; ++c) {
      std::vector<std::vector<int>> prefixes;
      std::vector<int> scratch;
      descending(j, b - c, scratch, prefixes);
      for (const auto& prefix : prefixes) {
        auto x = zeros();
        std::copy(prefix.begin(), prefix.end(), x.begin());
        x[j] = c;
        auto w1 = x;
        ++w1[0];
        --w1[j];
        auto w2 = x;
        ++w2[1];
        --w2[j];
        add(std::move(x), {at(w1), at(w2)});
      }
    }
  }
  return out;
}

IntegralAllocation snap_to_integral(const FractionalAllocation& p) {
  return TieBreak::by_alternative_index().select(hamilton(p));
}

FractionalInputMechanism snap_wrapper(IntegralMechanism mech) {
  return [mech = std::move(mech)](const FractionalProfile& profile) {
    std::vector<IntegralAllocation> votes;
    votes.reserve(profile.size());
    for (const auto& v : profile.votes()) votes.push_back(snap_to_integral(v));
    return mech(IntegralProfile(profile.instance(), std::move(votes)));
  };
}

}  // namespace budgetagg
