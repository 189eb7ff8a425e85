#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace invtree {

enum class ErrorCode {
  InvalidArgument = 1,
  Parse = 2,
  LimitExceeded = 3,
  Precondition = 4,
  Internal = 6,
};

// Base exception for every failure raised by the library. The C API maps
// the code onto its status enum.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

// Syntax error in one of the text formats; position is a byte offset into
// the input.
class ParseError : public Error {
public:
  ParseError(std::size_t position, const std::string& what)
      : Error(ErrorCode::Parse,
              "parse error at offset " + std::to_string(position) + ": " + what),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

class PreconditionError : public Error {
public:
  explicit PreconditionError(const std::string& what)
      : Error(ErrorCode::Precondition, what) {}
};

class LimitError : public Error {
public:
  explicit LimitError(const std::string& what)
      : Error(ErrorCode::LimitExceeded, what) {}
};

}  // namespace invtree
