#pragma once

#include <functional>
#include <vector>

#include "budgetagg/mechanism.hpp"

namespace budgetagg {

// One element of the linked ordering with the indices of earlier elements it is
// l1-adjacent to (distance exactly 2).
struct LinkedEntry {
  IntegralAllocation allocation;
  std::vector<int> witnesses;
};

// Orders I^m_b so that every element from the third on is adjacent to two
// earlier ones. Three phases:
//   1. alternatives 1..3 only, a_3 in {0, 1}: shift units 1 -> 3 -> 2 alternately;
//   2. a_3 = 2..b, with (a_1, a_2) in descending lexicographic order;
//   3. for j = 4..m and a_j = 1..b, the prefix a_1..a_{j-1} in descending order.
// With m = 2 only phase 1 applies and each element has its predecessor as single witness.
// Requires (m - 1) * b >= 2.
std::vector<LinkedEntry> linked_order(int m, int b);

// Hamilton rounding with index tie-break; l1 distance to p is at most m/2.
IntegralAllocation snap_to_integral(const FractionalAllocation& p);

using FractionalInputMechanism = std::function<IntegralAllocation(const FractionalProfile&)>;

// Snaps every vote, then runs `mech` on the resulting integral profile.
FractionalInputMechanism snap_wrapper(IntegralMechanism mech);

}  // namespace budgetagg
