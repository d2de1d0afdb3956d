#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace towers {

// Base of every condition this library raises on purpose.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Evaluation would exceed the configured bit cap.
struct OverflowError : Error {
  using Error::Error;
};

// Argument outside an operation's domain.
struct DomainError : Error {
  using Error::Error;
};

// Input breaks the canonical-form rules (factor order, sign placement, ...).
struct CanonicalError : Error {
  using Error::Error;
};

// Malformed text; position is the byte offset of the offending token.
struct SyntaxError : Error {
  SyntaxError(const std::string& what, std::size_t pos)
      : Error(what + " at offset " + std::to_string(pos)), position(pos) {}
  std::size_t position;
};

// A product expansion merged two identical terms. The expansions used here
// are expected to keep every coefficient at 1, so this signals a real bug
// (or a disproved expectation) and is never swallowed.
struct DuplicateGenerated : Error {
  using Error::Error;
};

struct NotPerfectSquare : Error {
  using Error::Error;
};

struct NotApplicable : Error {
  using Error::Error;
};

// The result would be zero or negative, and no tower stands for those.
struct NonRepresentable : Error {
  using Error::Error;
};

// The search universe has no element matching the required conditions.
struct NotFound : Error {
  using Error::Error;
};

}  // namespace towers
