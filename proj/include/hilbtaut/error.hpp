#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hilbtaut {

// Error tags surfaced by every module. The numeric values are part of the
// C API contract (see hilbtaut.h); do not renumber.
enum class ErrorCode : int {
  SyntaxError = 10,
  UnknownSymbol = 11,
  DegreeMismatch = 12,
  RingMismatch = 13,
  IndexError = 14,
  UnknownMap = 15,
  Unsupported = 20,
  VarietyMismatch = 21,
  ZeroRank = 22,
  NotLocallyFree = 30,
  MissingData = 31,
  H2Nonzero = 32,
  KTooSmall = 33,
  ShapeMismatch = 40,
  ConfigInvalid = 50,
  Internal = 99,
};

std::string_view error_tag(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_tag(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Parser errors also carry the byte offset of the offending token.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& what)
      : Error(ErrorCode::SyntaxError, what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace hilbtaut
