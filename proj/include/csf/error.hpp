#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace csf {

enum class ErrorCode {
  WeightMismatch,
  InvalidPartition,
  VertexOutOfRange,
  InvalidSize,
  InvalidPoset,
  ParseError,
  CountOverflow,
  OracleTooLarge,
  NegativeCoefficient,
  NotClawFree,
  TypeMismatch,
  EmptyWord,
  NotInImage,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Checked 64-bit arithmetic. Overflow raises CountOverflow.
inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorCode::CountOverflow, "64-bit addition overflow");
  return r;
}

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorCode::CountOverflow, "64-bit multiplication overflow");
  return r;
}

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorCode::CountOverflow, "signed 64-bit addition overflow");
  return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw Error(ErrorCode::CountOverflow, "signed 64-bit subtraction overflow");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorCode::CountOverflow, "signed 64-bit multiplication overflow");
  return r;
}

inline std::int64_t to_signed(std::uint64_t v) {
  if (v > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()))
    throw Error(ErrorCode::CountOverflow, "count does not fit a signed coefficient");
  return static_cast<std::int64_t>(v);
}

}  // namespace csf
