#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace slnrect {

enum class ErrorKind {
  all_zero_input,
  resource_exceeded,
  not_a_section,
  not_unimodular,
  invalid_support,
  first_column_not_preserved,
  size_mismatch,
  not_an_embedding,
  search_exhausted,
  precondition_failed,
  division_obstruction,
  unsupported_size,
  divisibility_fails,
  heuristic_failed,
  degree_obstruction,
  parse_error,
  replay_mismatch,
};

std::string_view to_string(ErrorKind kind);

/// Base of every error raised by the library. `detail` carries the
/// canonical text of the offending payload (a polynomial, a count) when
/// there is one.
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& message, std::string detail = {})
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind), detail_(std::move(detail)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& detail() const noexcept { return detail_; }

private:
  ErrorKind kind_;
  std::string detail_;
};

class ParseError : public Error {
public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : Error(ErrorKind::parse_error,
              "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
        line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace slnrect
