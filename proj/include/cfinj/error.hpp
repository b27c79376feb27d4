#ifndef CFINJ_ERROR_HPP_
#define CFINJ_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cfinj {

//! Base class for every error raised by the library.
struct CfinjError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// --- construction / validation of elements ---

//! Two defined table rows share the same value.
struct InjectivityViolation : CfinjError {
  using CfinjError::CfinjError;
};

//! A defined table value lands inside the tail image.
struct TailCollision : CfinjError {
  using CfinjError::CfinjError;
};

//! threshold + shift < 0, so the tail would leave the naturals.
struct NegativeTail : CfinjError {
  using CfinjError::CfinjError;
};

//! Checked integer arithmetic overflowed, or a table would exceed the
//! representable size bound.
struct OverflowError : CfinjError {
  using CfinjError::CfinjError;
};

// --- domain preconditions ---

struct NotIdempotent : CfinjError {
  using CfinjError::CfinjError;
};

struct NotAUnit : CfinjError {
  using CfinjError::CfinjError;
};

struct IsIdentity : CfinjError {
  using CfinjError::CfinjError;
};

//! Domain and range complements have different sizes.
struct IndexNonzero : CfinjError {
  using CfinjError::CfinjError;
};

//! Input list of idempotents is not strictly descending.
struct NotAChain : CfinjError {
  using CfinjError::CfinjError;
};

//! A hole sequence that is not eventually consecutive-ascending cannot be
//! realised by an eventually-shift map.
struct NonRepresentable : CfinjError {
  using CfinjError::CfinjError;
};

// --- oracle ---

struct WindowTooSmall : CfinjError {
  using CfinjError::CfinjError;
};

struct BoundExceeded : CfinjError {
  using CfinjError::CfinjError;
};

// --- expression front end ---

//! Syntax error; carries the byte offset into the input.
struct ParseError : CfinjError {
  ParseError(std::string const& what, std::size_t pos)
      : CfinjError(what + " (at position " + std::to_string(pos) + ")"),
        position(pos) {}
  std::size_t position;
};

//! A literal parsed but denotes no valid element (bad table, overlapping
//! cycles, ...).
struct ValidationError : CfinjError {
  using CfinjError::CfinjError;
};

}  // namespace cfinj

#endif  // CFINJ_ERROR_HPP_
