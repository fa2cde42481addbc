#pragma once

#include <functional>
#include <optional>
#include <set>

#include "budgetagg/mechanism.hpp"

namespace budgetagg {

// Non-resolute result of an apportionment method; every member sums to b.
using ApportionmentOutcome = std::set<IntegralAllocation>;

using ApportionmentMethod = std::function<ApportionmentOutcome(const FractionalAllocation&)>;

// Largest remainders: floors plus one extra unit for each of the alternatives
// with the largest residues, one member per maximal selection.
ApportionmentOutcome hamilton(const FractionalAllocation& a);

// Highest averages with quotient a_j / (gamma_j + delta), every tie path explored.
// delta must lie in (0, 1]; anything else throws UnsupportedParameter.
ApportionmentOutcome stationary_divisor(const FractionalAllocation& a, const Rat& delta);

// Sequential unit assignment to an eligible argmin of (gamma_j + 1) / a_j, where
// j is eligible in round k if gamma_j < a_j * k / sum(a). All tie paths explored.
ApportionmentOutcome quota_method(const FractionalAllocation& a);

enum class TieBreakPolicy { ByAlternativeIndex, ByLargerInput, Lexicographic };

// Picks one member of a non-empty outcome.
//   ByAlternativeIndex: favour lower-index alternatives (lexicographic maximum).
//   Lexicographic: lexicographic minimum.
//   ByLargerInput: favour alternatives with larger input amount, lower index on
//     equal amounts (lexicographic maximum after reordering by that priority).
class TieBreak {
 public:
  static TieBreak by_alternative_index() { return TieBreak(TieBreakPolicy::ByAlternativeIndex, {}); }
  static TieBreak lexicographic() { return TieBreak(TieBreakPolicy::Lexicographic, {}); }
  static TieBreak by_larger_input(FractionalAllocation input) {
    return TieBreak(TieBreakPolicy::ByLargerInput, std::move(input));
  }

  TieBreakPolicy policy() const { return policy_; }
  IntegralAllocation select(const ApportionmentOutcome& outcome) const;

 private:
  TieBreak(TieBreakPolicy policy, std::optional<FractionalAllocation> input)
      : policy_(policy), input_(std::move(input)) {}

  TieBreakPolicy policy_;
  std::optional<FractionalAllocation> input_;
};

// P -> select(method(mech(P))). ByLargerInput binds to mech(P) on each call.
IntegralMechanism compose(FractionalMechanism mech, ApportionmentMethod method,
                          TieBreakPolicy policy);

}  // namespace budgetagg
