#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace deltamix {

// Domain errors carry a stable machine-readable name; the CLI maps them to
// exit code 1 and prints "error: <name>: <message>".
class DomainError : public std::runtime_error {
 public:
  DomainError(std::string name, const std::string& message)
      : std::runtime_error(message), name_(std::move(name)) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

#define DELTAMIX_ERROR(Type)                               \
  class Type : public DomainError {                        \
   public:                                                 \
    explicit Type(const std::string& message)              \
        : DomainError(#Type, message) {}                   \
  }

DELTAMIX_ERROR(InvalidSubshift);
DELTAMIX_ERROR(CapExceeded);
DELTAMIX_ERROR(HorizonExceeded);
DELTAMIX_ERROR(EmptyOpenSet);
DELTAMIX_ERROR(NoWitnessInHorizon);
DELTAMIX_ERROR(InvalidTolerance);
DELTAMIX_ERROR(InvalidSplit);
DELTAMIX_ERROR(BudgetExceeded);
DELTAMIX_ERROR(EntropyZero);
DELTAMIX_ERROR(InvalidArgument);
DELTAMIX_ERROR(InvariantViolation);

#undef DELTAMIX_ERROR

// I/O and format problems; the CLI maps these to exit code 2.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& message) : std::runtime_error(message) {}
};

}  // namespace deltamix
