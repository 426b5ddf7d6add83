#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace zetaforge {

/// Raised when an argument lies outside the domain of an operation
/// (vanishing denominator, |z| >= 1, beta = 0 where beta^-s appears, ...).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what,
                       std::optional<long> index = std::nullopt)
      : std::domain_error(what), index_(index) {}

  /// Offending summation index, when the failure is tied to one term.
  std::optional<long> index() const noexcept { return index_; }

 private:
  std::optional<long> index_;
};

/// Malformed textual input ("p/q", "p/q+r/s*i", decimal strings).
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace zetaforge
