#include "budgetagg/apportionment.hpp"

#include <algorithm>
#include <numeric>

#include "budgetagg/errors.hpp"

namespace budgetagg {

namespace {

int integral_budget(const FractionalAllocation& a) {
  if (!is_integer(a.budget())) {
    throw InvalidInput("apportionment needs an integral budget, got " + to_string(a.budget()));
  }
  return static_cast<int>(a.budget().numerator());
}

// Recursively picks `remaining` members of `pool` starting at `from`.
void choose(const std::vector<int>& pool, std::size_t from, int remaining, std::vector<int>& amounts,
            ApportionmentOutcome& out) {
  if (remaining == 0) {
    out.insert(IntegralAllocation(amounts));
    return;
  }
  for (std::size_t i = from; i + remaining <= pool.size(); ++i) {
    ++amounts[pool[i]];
    choose(pool, i + 1, remaining - 1, amounts, out);
    --amounts[pool[i]];
  }
}

// Depth-first search over tie decisions; `pick` returns the alternatives that may
// receive the next unit. States already expanded are skipped.
template <class Pick>
ApportionmentOutcome assign_units(std::size_t m, int b, Pick pick) {
  ApportionmentOutcome out;
  std::set<std::vector<int>> seen;
  std::vector<int> gamma(m, 0);
  std::function<void(int)> dfs = [&](int round) {
    if (round > b) {
      out.insert(IntegralAllocation(gamma));
      return;
    }
    if (!seen.insert(gamma).second) return;
    const auto options = pick(gamma, round);
    if (options.empty()) throw ConstructionError("no alternative can receive the next unit");
    for (int j : options) {
      ++gamma[j];
      dfs(round + 1);
      --gamma[j];
    }
  };
  dfs(1);
  return out;
}

}  // namespace

ApportionmentOutcome hamilton(const FractionalAllocation& a) {
  const int b = integral_budget(a);
  const std::size_t m = a.size();
  std::vector<int> amounts(m);
  std::vector<Rat> residue(m);
  int assigned = 0;
  for (std::size_t j = 0; j < m; ++j) {
    amounts[j] = static_cast<int>(floor_of(a[j]));
    residue[j] = a[j] - amounts[j];
    assigned += amounts[j];
  }
  int extra = b - assigned;
  ApportionmentOutcome out;
  if (extra == 0) {
    out.insert(IntegralAllocation(amounts));
    return out;
  }
  std::vector<Rat> sorted = residue;
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  const Rat cutoff = sorted[extra - 1];
  std::vector<int> tied;
  for (std::size_t j = 0; j < m; ++j) {
    if (residue[j] > cutoff) {
      ++amounts[j];
      --extra;
    } else if (residue[j] == cutoff) {
      tied.push_back(static_cast<int>(j));
    }
  }
  choose(tied, 0, extra, amounts, out);
  return out;
}

ApportionmentOutcome stationary_divisor(const FractionalAllocation& a, const Rat& delta) {
  if (delta <= 0 || delta > 1) {
    throw UnsupportedParameter("divisor parameter must lie in (0, 1], got " + to_string(delta));
  }
  const int b = integral_budget(a);
  return assign_units(a.size(), b, [&](const std::vector<int>& gamma, int) {
    std::vector<int> best;
    Rat top(0);
    for (std::size_t j = 0; j < gamma.size(); ++j) {
      if (a[j] == 0) continue;
      const Rat q = a[j] / (Rat(gamma[j]) + delta);
      if (best.empty() || q > top) {
        best.assign(1, static_cast<int>(j));
        top = q;
      } else if (q == top) {
        best.push_back(static_cast<int>(j));
      }
    }
    return best;
  });
}

ApportionmentOutcome quota_method(const FractionalAllocation& a) {
  const int b = integral_budget(a);
  const Rat total = a.budget();
  return assign_units(a.size(), b, [&](const std::vector<int>& gamma, int round) {
    std::vector<int> best;
    Rat top(0);
    for (std::size_t j = 0; j < gamma.size(); ++j) {
      if (a[j] == 0 || !(Rat(gamma[j]) < a[j] * round / total)) continue;
      const Rat q = Rat(gamma[j] + 1) / a[j];
      if (best.empty() || q < top) {
        best.assign(1, static_cast<int>(j));
        top = q;
      } else if (q == top) {
        best.push_back(static_cast<int>(j));
      }
    }
    return best;
  });
}

IntegralAllocation TieBreak::select(const ApportionmentOutcome& outcome) const {
  if (outcome.empty()) throw InvalidInput("cannot break ties in an empty outcome");
  switch (policy_) {
    case TieBreakPolicy::ByAlternativeIndex:
      return *outcome.rbegin();
    case TieBreakPolicy::Lexicographic:
      return *outcome.begin();
    case TieBreakPolicy::ByLargerInput:
      break;
  }
  const auto& input = *input_;
  const std::size_t m = outcome.begin()->size();
  if (input.size() != m) throw InvalidInput("tie-break input has the wrong dimension");
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return input[x] > input[y]; });
  auto key = [&](const IntegralAllocation& x) {
    std::vector<int> k;
    k.reserve(m);
    for (auto j : order) k.push_back(x[j]);
    return k;
  };
  return *std::max_element(outcome.begin(), outcome.end(),
                           [&](const auto& x, const auto& y) { return key(x) < key(y); });
}

IntegralMechanism compose(FractionalMechanism mech, ApportionmentMethod method,
                          TieBreakPolicy policy) {
  return [mech = std::move(mech), method = std::move(method), policy](const IntegralProfile& p) {
    const auto fractional = mech(to_fractional(p));
    const auto outcome = method(fractional);
    switch (policy) {
      case TieBreakPolicy::ByAlternativeIndex:
        return TieBreak::by_alternative_index().select(outcome);
      case TieBreakPolicy::Lexicographic:
        return TieBreak::lexicographic().select(outcome);
      case TieBreakPolicy::ByLargerInput:
        break;
    }
    return TieBreak::by_larger_input(fractional).select(outcome);
  };
}

}  // namespace budgetagg
