#pragma once

#include <stdexcept>
#include <string>

namespace labelcap {

// Raised when an exact computation would exceed its configured budget
// (brute-force enumeration size, subset-construction state cap, ...).
// Callers get a refusal, never a silently truncated result.
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Raised for queries outside the range the implemented results cover
// (e.g. label-ordering beyond length 5, minimal label count for length >= 3).
class UnsupportedScope : public std::runtime_error {
 public:
  explicit UnsupportedScope(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace labelcap
