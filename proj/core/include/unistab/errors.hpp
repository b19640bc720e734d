#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace unistab {

/// Raised when an operation receives arguments outside its domain.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Text-format parse failure carrying a 1-based line/column position.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Homomorphism counting refused because the enumeration would exceed the budget.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, std::uint64_t estimate, std::uint64_t budget)
      : std::runtime_error(what + ": needs up to " + std::to_string(estimate) +
                           " assignments, budget is " + std::to_string(budget)),
        estimate_(estimate),
        budget_(budget) {}

  std::uint64_t estimate() const noexcept { return estimate_; }
  std::uint64_t budget() const noexcept { return budget_; }

 private:
  std::uint64_t estimate_;
  std::uint64_t budget_;
};

}  // namespace unistab
