#pragma once

#include <stdexcept>
#include <string>

#include "primod/bigint.hpp"

namespace primod {

/// Base class for all errors thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Level is zero or exceeds the configured cap.
class LevelRangeError : public Error {
 public:
  using Error::Error;
};

/// Two operands belong to different levels.
class LevelMismatchError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the operation's domain (negative integer, bad position,
/// out-of-range residue, zero extension count, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Inverse requested for a residue divisible by the modulus.
class NoInverseError : public Error {
 public:
  using Error::Error;
};

/// Classification requested for a tuple with a zero residue.
class NotCoprimeError : public Error {
 public:
  using Error::Error;
};

/// An enumeration or sieve would exceed its configured budget. Carries the
/// size the caller would need to allow for the request to proceed.
class BudgetError : public Error {
 public:
  BudgetError(const std::string& what, BigInt required, BigInt allowed)
      : Error(what), required_(std::move(required)), allowed_(std::move(allowed)) {}

  const BigInt& required() const noexcept { return required_; }
  const BigInt& allowed() const noexcept { return allowed_; }

 private:
  BigInt required_;
  BigInt allowed_;
};

}  // namespace primod
