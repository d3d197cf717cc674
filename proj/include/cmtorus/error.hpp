#pragma once

#include <stdexcept>
#include <string>

namespace cmtorus {

/// Base class for every error raised by the library.
class Error : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

/// Matrix or module shapes do not fit together.
class DimensionMismatch : public Error
{
  public:
    using Error::Error;
};

/// An input violates a documented invariant (non-central involution,
/// non-equivariant action, unknown place, ...).
class ValidationError : public Error
{
  public:
    using Error::Error;
};

/// A computation exceeded a documented bound (group order cap, search
/// bound, conductor cap).
class BoundExceeded : public Error
{
  public:
    using Error::Error;
};

}  // namespace cmtorus
