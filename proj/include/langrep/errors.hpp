#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace langrep {

enum class ErrorKind {
  invalid_arguments,
  empty_projection,
  not_symmetric,
  unsupported_combinator,
  unsupported,
  capacity,
  format,
  parse,
  precondition,
  verification_failed,
};

std::string_view kind_name(ErrorKind kind) noexcept;

// Every library failure is reported through this type; `kind()` is stable
// and is what the CLI maps to exit codes and JSON error objects.
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(kind_name(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

class FormatError : public Error {
public:
  FormatError(std::size_t offset, const std::string& message)
      : Error(ErrorKind::format, message + " at byte " + std::to_string(offset)), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

private:
  std::size_t offset_;
};

} // namespace langrep
