#pragma once

#include <variant>

#include <nlohmann/json.hpp>

#include "budgetagg/profile.hpp"

namespace budgetagg {

// Profile documents look like {"n": 2, "m": 3, "b": 4, "votes": [[4,0,0],[3,1,0]]}.
// Integral amounts are JSON integers; fractional amounts may also be "num/den" strings.
// Every parse failure surfaces as InvalidInput.

nlohmann::json rat_to_json(const Rat& value);
Rat rat_from_json(const nlohmann::json& value);

nlohmann::json to_json(const IntegralAllocation& a);
nlohmann::json to_json(const FractionalAllocation& a);
nlohmann::json to_json(const IntegralProfile& profile);
nlohmann::json to_json(const FractionalProfile& profile);

IntegralAllocation integral_allocation_from_json(const nlohmann::json& doc);
FractionalAllocation fractional_allocation_from_json(const nlohmann::json& doc);

IntegralProfile integral_profile_from_json(const nlohmann::json& doc);
FractionalProfile fractional_profile_from_json(const nlohmann::json& doc);

// Integral when every amount is a JSON integer, fractional otherwise.
std::variant<IntegralProfile, FractionalProfile> profile_from_json(const nlohmann::json& doc);

}  // namespace budgetagg
