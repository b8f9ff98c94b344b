#include "neu/error.hpp"

namespace neu {

std::string_view to_string(ErrorKind kind) noexcept
{
  switch (kind) {
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::NotNormalized: return "NotNormalized";
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::DegenerateQ: return "DegenerateQ";
    case ErrorKind::LexError: return "LexError";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UnboundAtom: return "UnboundAtom";
    case ErrorKind::UniverseMismatch: return "UniverseMismatch";
    case ErrorKind::UnknownEvent: return "UnknownEvent";
    case ErrorKind::EmptySpace: return "EmptySpace";
    case ErrorKind::InvariantViolation: return "InvariantViolation";
    case ErrorKind::IoError: return "IoError";
  }
  return "Unknown";
}

namespace {

std::string decorate(ErrorKind kind, const std::string& message,
                     std::optional<std::size_t> position)
{
  std::string out(to_string(kind));
  if (position) out += " at offset " + std::to_string(*position);
  out += ": ";
  out += message;
  return out;
}

}  // namespace

Error::Error(ErrorKind kind, const std::string& message,
             std::optional<std::size_t> position)
  : std::runtime_error(decorate(kind, message, position)),
    kind_(kind),
    position_(position)
{
}

}  // namespace neu
