#pragma once
// Exception hierarchy for the whole library.  Everything user-facing derives
// from gkoszul::Error so the CLI can map failures to exit code 2 uniformly.

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gkoszul {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input text could not be parsed; `pos` is the byte offset of the offending
// character in the original string.
struct ParseError : Error {
  std::size_t pos;
  ParseError(const std::string& msg, std::size_t pos_)
      : Error(msg + " (at position " + std::to_string(pos_) + ")"), pos(pos_) {}
};

struct UnknownVariable : ParseError {
  std::string name;
  UnknownVariable(const std::string& name_, std::size_t pos_)
      : ParseError("unknown variable '" + name_ + "'", pos_), name(name_) {}
};

// The presented quotient is not a finite-dimensional local algebra.
struct NotArtinian : Error {
  using Error::Error;
};

// The working truncation degree is provably too small to certify the length.
struct TruncationTooSmall : Error {
  using Error::Error;
};

// A dual form was identically zero.
struct ZeroForm : Error {
  using Error::Error;
};

// A dual form whose annihilator contains linear forms (the associated
// algebra would have smaller embedding dimension).
struct DegenerateForm : Error {
  using Error::Error;
};

// Power series division needs a denominator with constant term +1 or -1 so
// the integer result is exact.
struct NonUnitDenominator : Error {
  using Error::Error;
};

// A map handed to a homological routine does not commute with the module
// actions.
struct NotEquivariant : Error {
  using Error::Error;
};

// A routine was called outside its documented hypotheses (e.g. t out of
// range, module not annihilated as required).
struct PreconditionViolated : Error {
  using Error::Error;
};

// A check that assumes a structural hypothesis detected that the hypothesis
// fails on this input.
struct HypothesisFailed : Error {
  using Error::Error;
};

// A computation would need homological degrees beyond the configured depth.
struct DepthExceeded : Error {
  using Error::Error;
};

}  // namespace gkoszul
