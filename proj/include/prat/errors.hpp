#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace prat {

/// Base class for every anticipated failure. The tag is a short
/// machine-readable identifier that the CLI prints on standard error.
class Error : public std::runtime_error {
 public:
  Error(std::string tag, const std::string& what)
      : std::runtime_error(what), tag_(std::move(tag)) {}

  const std::string& tag() const noexcept { return tag_; }

 private:
  std::string tag_;
};

/// An input violates an operation's precondition (non-prime p,
/// non-fundamental discriminant, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A rational coefficient could not be reduced modulo p^e because p divides
/// its denominator. Callers should switch to the p-cleared series.
class DenominatorNotInvertible : public Error {
 public:
  explicit DenominatorNotInvertible(std::size_t index)
      : Error("denominator_not_invertible",
              "denominator of coefficient " + std::to_string(index) +
                  " is divisible by p"),
        index_(index) {}

  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

class PrecisionTooSmall : public Error {
 public:
  explicit PrecisionTooSmall(std::size_t required)
      : Error("precision_too_small",
              "series precision must be at least " + std::to_string(required)),
        required_(required) {}

  std::size_t required() const noexcept { return required_; }

 private:
  std::size_t required_;
};

/// Raised when an enumeration that is guaranteed to succeed comes back empty.
/// Seeing this means the L-value engine is wrong.
class NoWitnessFound : public Error {
 public:
  explicit NoWitnessFound(const std::string& what)
      : Error("no_witness_found", what) {}
};

/// Malformed or unsupported qexp file.
class FormatError : public Error {
 public:
  explicit FormatError(const std::string& what) : Error("format_error", what) {}
};

}  // namespace prat
