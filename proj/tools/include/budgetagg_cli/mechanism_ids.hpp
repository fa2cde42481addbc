#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "budgetagg/apportionment.hpp"
#include "budgetagg/mechanism.hpp"

namespace budgetagg::cli {

// Unknown or malformed identifiers.
class UnknownId : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// "im" | "utilitarian"
FractionalMechanism fractional_mechanism(const std::string& id);

// "hamilton" | "quota" | "divisor:<delta>" (delta like 1 or 1/2)
ApportionmentMethod apportionment_method(const std::string& id);

// "index" | "larger-input" | "lex"
TieBreakPolicy tie_break_policy(const std::string& id);

// floor-im, floor-util, ceiling-im, constant, first-vote, or
// compose:<fractional>+<method>+<tiebreak>, e.g. compose:im+divisor:1+larger-input.
IntegralMechanism integral_mechanism(const std::string& id);

bool is_fractional_id(const std::string& id);

}  // namespace budgetagg::cli
