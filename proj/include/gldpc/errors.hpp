#pragma once
#include <stdexcept>
#include <string>

namespace gldpc {

// A guarantee precondition on the ensemble parameters does not hold (for
// example the flip threshold is too small for the analysis to apply).
class ConditionError : public std::runtime_error {
 public:
  explicit ConditionError(const std::string& what)
      : std::runtime_error(what) {}
};

// An enumeration or search exceeded its configured work budget.
class BudgetExhausted : public std::runtime_error {
 public:
  explicit BudgetExhausted(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace gldpc
