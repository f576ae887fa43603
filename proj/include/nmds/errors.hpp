#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace nmds {

// A caller violated a documented precondition (bad modulus, family hypothesis,
// out-of-range parameter). The CLI maps this to exit code 2.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An enumeration would exceed the configured work budget. Exit code 3.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, std::uint64_t requested, std::uint64_t limit)
      : std::runtime_error(what), requested_(requested), limit_(limit) {}

  std::uint64_t requested() const noexcept { return requested_; }
  std::uint64_t limit() const noexcept { return limit_; }

 private:
  std::uint64_t requested_;
  std::uint64_t limit_;
};

// Two routes that must agree did not, or an exact quantity came out
// non-integral. Signals a falsified claim or an internal bug.
class InconsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace nmds
