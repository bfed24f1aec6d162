#pragma once

#include "hf/numeric.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace hf {

/// Base of every error the library raises.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The input does not describe a valid pointed Heegaard diagram.
class InvalidDiagram : public Error {
 public:
  InvalidDiagram(const std::string& what, std::vector<std::string> details = {})
      : Error(what), details_(std::move(details)) {}
  const std::vector<std::string>& details() const noexcept { return details_; }

 private:
  std::vector<std::string> details_;
};

/// Euler measure plus point measures failed to be an integer.
class NonIntegral : public Error {
 public:
  NonIntegral(const std::string& what, Rational value) : Error(what), value_(std::move(value)) {}
  const Rational& value() const noexcept { return value_; }

 private:
  Rational value_;
};

/// The positive-domain polytope has a recession direction: some nonzero
/// periodic domain is everywhere nonnegative.
class Unbounded : public Error {
 public:
  explicit Unbounded(IntVector witness)
      : Error("positive domains are unbounded: nonnegative periodic direction exists"),
        witness_(std::move(witness)) {}
  const IntVector& witness() const noexcept { return witness_; }

 private:
  IntVector witness_;
};

/// No admissibility certificate exists.
class NotAdmissible : public Error {
 public:
  using Error::Error;
};

/// Malformed arguments from a caller (bad generator, out-of-range class, ...).
class UsageError : public Error {
 public:
  using Error::Error;
};

}  // namespace hf
