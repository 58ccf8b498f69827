#ifndef GOODSG_ERRORS_HPP_
#define GOODSG_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace goodsg {

//! Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

//! Two points (or a point and a structure) of different dimension met in a
//! binary operation.
class DimensionMismatch : public Error {
 public:
  DimensionMismatch(std::size_t lhs, std::size_t rhs)
      : Error("dimension mismatch: " + std::to_string(lhs) + " vs " +
              std::to_string(rhs)) {}
};

//! The operation is only defined (or only implemented) for n = 2.
class UnsupportedDimension : public Error {
 public:
  UnsupportedDimension(std::string const& op, std::size_t dim)
      : Error(op + " requires dimension 2, got " + std::to_string(dim)) {}
};

//! The operation needs a local good semigroup (only 0 on the axes).
class NonLocal : public Error {
 public:
  explicit NonLocal(std::string const& op)
      : Error(op + " requires a local good semigroup") {}
};

//! Malformed input: wrong sign, empty set, gcd != 1, ...
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

//! A candidate set of generators does not regenerate Small(S).
class NotAGeneratingSystem : public Error {
 public:
  using Error::Error;
};

//! Two independent computations of the same object disagreed.
class InternalMismatch : public Error {
 public:
  using Error::Error;
};

}  // namespace goodsg

#endif  // GOODSG_ERRORS_HPP_
