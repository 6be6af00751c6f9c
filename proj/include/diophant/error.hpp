#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace diophant {

enum class ErrorCode {
  kNotSolvable,
  kZeroCoefficient,
  kRawFormTooLarge,
  kFactorizationLimitExceeded,
  kDimensionMismatch,
  kNotInFamily,
  kParseError,
  kInvalidArgument,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t position, std::string expected)
      : Error(ErrorCode::kParseError,
              "parse error at offset " + std::to_string(position) +
                  ": expected " + expected),
        position_(position),
        expected_(std::move(expected)) {}

  std::size_t position() const noexcept { return position_; }
  const std::string& expected() const noexcept { return expected_; }

 private:
  std::size_t position_;
  std::string expected_;
};

}  // namespace diophant
