#pragma once

#include <stdexcept>
#include <string>

namespace fockzip {

// Base class for all fockzip errors.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Operands live in spaces of different mode counts or dimensions.
class DimensionError : public Error {
public:
  using Error::Error;
};

// An input is outside the domain of the operation.
class DomainError : public Error {
public:
  using Error::Error;
};

// A value fails its structural invariants (bad normalization, bad pattern, ...).
class ValidationError : public Error {
public:
  using Error::Error;
};

// A stated precondition of the operation does not hold.
class PreconditionError : public Error {
public:
  using Error::Error;
};

// An enumeration would exceed the configured cap.
class ResourceError : public Error {
public:
  using Error::Error;
};

// Not enough modes to hold an encoded state.
class CapacityError : public Error {
public:
  using Error::Error;
};

// An encoded state contains a ket that is not a codeword of the book.
class CorruptionError : public Error {
public:
  using Error::Error;
};

// The transmitted total-length side information does not match the book.
class SideInfoError : public Error {
public:
  using Error::Error;
};

}  // namespace fockzip
