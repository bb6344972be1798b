#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace primaltop {

/// Bit pattern of a subset over a universe of at most 16 points.
/// Point with index 0 occupies the least significant bit.
using Bits = std::uint32_t;

/// Base class for all engine errors. `code()` is a stable machine-readable
/// tag ("not-closed-under-union", "universe-mismatch", ...) surfaced by the
/// CLI and by reports.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

/// Two values bound to different universes were combined.
class UniverseMismatchError : public Error {
 public:
  explicit UniverseMismatchError(const std::string& message)
      : Error("universe-mismatch", message) {}
};

/// A point name that does not belong to the universe.
class UnknownPointError : public Error {
 public:
  explicit UnknownPointError(const std::string& message)
      : Error("unknown-point", message) {}
};

/// A size bound was exceeded (universe too large, enumeration bound, ...).
class BoundError : public Error {
 public:
  BoundError(std::string code, const std::string& message)
      : Error(std::move(code), message) {}
};

/// An internal invariant failed. Maps to CLI exit code 3.
class InternalError : public Error {
 public:
  explicit InternalError(const std::string& message)
      : Error("internal-invariant-breach", message) {}
};

/// A family of sets failed the open-set axioms. Carries the violated axiom
/// and the witnessing subsets as bit patterns.
class TopologyValidationError : public Error {
 public:
  enum class Kind {
    MissingEmpty,
    MissingUniverse,
    NotClosedUnderUnion,
    NotClosedUnderIntersection,
  };

  TopologyValidationError(Kind kind, std::string code,
                          const std::string& message, std::vector<Bits> witness)
      : Error(std::move(code), message), kind_(kind), witness_(std::move(witness)) {}

  Kind kind() const noexcept { return kind_; }
  const std::vector<Bits>& witness() const noexcept { return witness_; }

 private:
  Kind kind_;
  std::vector<Bits> witness_;
};

/// A family of sets failed the primal axioms.
class PrimalValidationError : public Error {
 public:
  enum class Kind {
    ContainsUniverse,
    NotDownwardClosed,
    IntersectionViolation,
  };

  PrimalValidationError(Kind kind, std::string code,
                        const std::string& message, std::vector<Bits> witness)
      : Error(std::move(code), message), kind_(kind), witness_(std::move(witness)) {}

  Kind kind() const noexcept { return kind_; }
  const std::vector<Bits>& witness() const noexcept { return witness_; }

 private:
  Kind kind_;
  std::vector<Bits> witness_;
};

/// A candidate base whose union does not cover the universe.
class BaseError : public Error {
 public:
  explicit BaseError(const std::string& message)
      : Error("base-does-not-cover", message) {}
};

/// Malformed space document or report text.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& message)
      : Error("parse-error", message) {}
};

}  // namespace primaltop
