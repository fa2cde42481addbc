#pragma once

#include <functional>

#include "budgetagg/profile.hpp"

namespace budgetagg {

class PhantomSystem;

using IntegralMechanism = std::function<IntegralAllocation(const IntegralProfile&)>;
using FractionalMechanism = std::function<FractionalAllocation(const FractionalProfile&)>;

// Maps (n, b) to a phantom system, e.g. independent_markets.
using PhantomFamily = std::function<PhantomSystem(int n, int b)>;

}  // namespace budgetagg
