#pragma once

#include <stdexcept>
#include <string>

namespace autorbit {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad input: malformed arguments, violated preconditions.
class UsageError : public Error {
 public:
  using Error::Error;
};

/// A computational budget (order, node count, time) was exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

#define AUTORBIT_DEFINE_ERROR(Name, Base) \
  class Name : public Base {              \
   public:                                \
    using Base::Base;                     \
  };

AUTORBIT_DEFINE_ERROR(DegreeMismatch, UsageError)
AUTORBIT_DEFINE_ERROR(NotNormal, UsageError)
AUTORBIT_DEFINE_ERROR(InvalidAutomorphism, UsageError)
AUTORBIT_DEFINE_ERROR(NotPrime, UsageError)
AUTORBIT_DEFINE_ERROR(BadParameter, UsageError)
AUTORBIT_DEFINE_ERROR(ActionMismatch, UsageError)
AUTORBIT_DEFINE_ERROR(ShapeMismatch, UsageError)
AUTORBIT_DEFINE_ERROR(NotACycleOfTop, UsageError)
AUTORBIT_DEFINE_ERROR(NonAbelianQuotient, UsageError)
AUTORBIT_DEFINE_ERROR(GcdViolation, UsageError)
AUTORBIT_DEFINE_ERROR(BadComposition, UsageError)
AUTORBIT_DEFINE_ERROR(ParseError, UsageError)

AUTORBIT_DEFINE_ERROR(ClosureLimitExceeded, ResourceError)
AUTORBIT_DEFINE_ERROR(TooLarge, ResourceError)
AUTORBIT_DEFINE_ERROR(BudgetExceeded, ResourceError)
AUTORBIT_DEFINE_ERROR(TimeLimitExceeded, ResourceError)

#undef AUTORBIT_DEFINE_ERROR

}  // namespace autorbit
