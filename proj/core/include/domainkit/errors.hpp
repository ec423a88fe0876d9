#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace domainkit {

// Raised by operations whose preconditions or numeric certifications fail.
// `kind` is a stable machine-readable tag (e.g. "dimension-mismatch",
// "horizon-too-small"); tests and the CLI dispatch on it, the message is
// for humans.
class DomainError : public std::runtime_error {
 public:
  DomainError(std::string kind, const std::string& message)
      : std::runtime_error(kind + ": " + message), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

[[noreturn]] inline void raise(std::string kind, const std::string& message) {
  throw DomainError(std::move(kind), message);
}

}  // namespace domainkit
