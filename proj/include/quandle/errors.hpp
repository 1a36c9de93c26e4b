#pragma once

#include <stdexcept>
#include <string>

namespace quandle {

/// Failure of a domain precondition. `kind()` is the stable machine-readable
/// name used in CLI reports (e.g. "NotAUnit").
class DomainError : public std::runtime_error {
 public:
  DomainError(std::string kind, const std::string& message)
      : std::runtime_error(message), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

/// Malformed textual input (table files, words, flags).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline DomainError not_a_unit(long long t, long long n) {
  return DomainError("NotAUnit", std::to_string(t) + " is not a unit modulo " + std::to_string(n));
}

}  // namespace quandle
