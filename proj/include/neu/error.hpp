#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace neu {

enum class ErrorKind {
  OutOfRange,
  NotNormalized,
  EmptyInput,
  DegenerateQ,
  LexError,
  ParseError,
  UnboundAtom,
  UniverseMismatch,
  UnknownEvent,
  EmptySpace,
  InvariantViolation,
  IoError,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Domain error raised by every module. Lexer and parser errors carry the
/// 0-based character offset they refer to.
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& message,
        std::optional<std::size_t> position = std::nullopt);

  ErrorKind kind() const noexcept { return kind_; }
  std::optional<std::size_t> position() const noexcept { return position_; }

private:
  ErrorKind kind_;
  std::optional<std::size_t> position_;
};

}  // namespace neu
