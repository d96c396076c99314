// Error types shared across the library.
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace clenum {

// Malformed textual input (instance files, truth tables, clone names, DNF).
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// A structurally invalid request: illegal modifier combination, unusable
// operation table, out-of-range parameter, contract violations in general.
class SpecError : public std::runtime_error {
 public:
  explicit SpecError(const std::string& what) : std::runtime_error(what) {}
};

// An exhaustive computation outgrew its configured budget.
class BudgetError : public std::runtime_error {
 public:
  BudgetError(const std::string& what, std::size_t budget)
      : std::runtime_error(what), budget_(budget) {}
  std::size_t budget() const { return budget_; }

 private:
  std::size_t budget_;
};

}  // namespace clenum
