#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace jordanlab {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Arithmetic between scalars (or containers of scalars) from different fields.
class FieldMismatchError : public Error {
 public:
  using Error::Error;
};

/// Vector/matrix/ambient dimension disagreement.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Malformed user input: bad files, bad CLI arguments, invalid construction
/// parameters (non-prime modulus, zero denominator, oversized algebra, ...).
class InputError : public Error {
 public:
  using Error::Error;
};

/// Operation requested over a field it is not defined for.
class UnsupportedFieldError : public Error {
 public:
  using Error::Error;
};

/// A map was required to lie in some space and does not. Carries the first
/// violated basis pair together with the two sides of the failed identity.
class MembershipError : public Error {
 public:
  MembershipError(const std::string& what_arg, std::size_t i, std::size_t j,
                  std::string lhs, std::string rhs)
      : Error(what_arg), basis_i(i), basis_j(j), lhs_value(std::move(lhs)), rhs_value(std::move(rhs)) {}

  std::size_t basis_i;
  std::size_t basis_j;
  std::string lhs_value;
  std::string rhs_value;
};

}  // namespace jordanlab
