#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace mixdisc {

/// Malformed input: wrong shape, broken Hermitian symmetry, bad rational text.
/// `invariant()` names the violated invariant in a machine-readable way.
class InputError : public std::invalid_argument {
 public:
  InputError(std::string invariant, const std::string& message)
      : std::invalid_argument(message), invariant_(std::move(invariant)) {}

  const std::string& invariant() const noexcept { return invariant_; }

 private:
  std::string invariant_;
};

/// Well-formed input that fails an operation's mathematical precondition,
/// e.g. a non-PSD factor where semi-positivity is required.
class PreconditionError : public std::domain_error {
 public:
  PreconditionError(std::string condition, const std::string& message)
      : std::domain_error(message), condition_(std::move(condition)) {}

  const std::string& condition() const noexcept { return condition_; }

 private:
  std::string condition_;
};

}  // namespace mixdisc
