#pragma once

#include <stdexcept>

namespace budgetagg {

// Malformed votes, dimension or budget mismatches, bad JSON.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A phantom system that cannot guarantee normalization.
class InvalidSystem : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An integral phantom schedule that violates its positional bounds.
class InvalidSchedule : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ConstructionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnsupportedParameter : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InconsistentModel : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace budgetagg
