#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace systole {

/// Raised when an argument violates an operation's precondition.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Numerical failure: root finder non-convergence or a root too close to the
/// unit circle to classify at the requested tolerance.
class ToleranceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An exhaustive search whose node count exceeds the configured budget.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(std::uint64_t needed, std::uint64_t budget)
      : std::runtime_error("search needs " + std::to_string(needed) +
                           " nodes, budget is " + std::to_string(budget)),
        needed_(needed),
        budget_(budget) {}

  std::uint64_t needed() const noexcept { return needed_; }
  std::uint64_t budget() const noexcept { return budget_; }

 private:
  std::uint64_t needed_;
  std::uint64_t budget_;
};

}  // namespace systole
