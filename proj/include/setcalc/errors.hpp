#pragma once

#include <stdexcept>
#include <string>

namespace setcalc {

/// Base class for every error raised by the library.
class SetError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operand dimensions do not fit together.
class DimensionMismatch : public SetError {
public:
    using SetError::SetError;
};

/// The operation is not implemented for the given representation(s).
class UnsupportedOperation : public SetError {
public:
    using SetError::SetError;
};

/// A nonempty set was required.
class EmptySetError : public SetError {
public:
    using SetError::SetError;
};

/// A bounded set (or a bounded direction) was required.
class UnboundedError : public SetError {
public:
    using SetError::SetError;
};

/// Constructor or argument precondition violated.
class InvalidArgument : public SetError {
public:
    using SetError::SetError;
};

/// An iterative procedure hit its iteration/rejection budget.
class BudgetExceeded : public SetError {
public:
    using SetError::SetError;
};

}  // namespace setcalc
