#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace vkt {

enum class ErrorKind {
  InvalidArgument,
  NotTorsionFreePi1,
  InvalidCartanData,
  GroupTooLarge,
  Degenerate,
  NotEquivariant,
  InvalidTwist,
  NotPrimitive,
  NotATorus,
  Parse,
};

std::string_view to_string(ErrorKind kind);

/// Every failure surfaced by the library carries one of the kinds above so the
/// CLI can map it to a stable error tag.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string& what)
      : Error(ErrorKind::Parse, "line " + std::to_string(line) + ", column " +
                                    std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace vkt
