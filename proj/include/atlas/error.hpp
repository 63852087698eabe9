#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace atlas {

enum class ErrorKind {
  MalformedSpec,
  NotAGroup,
  TooLarge,
  NotNormal,
  DimensionMismatch,
  WrongParent,
  NotACocycle,
  InternalInconsistency,
  NotAbelian,
  NotQuadratic,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what, int line = 0);

  ErrorKind kind() const noexcept { return kind_; }
  // 1-based source line for parse errors, 0 when not applicable.
  int line() const noexcept { return line_; }
  // The message without the kind and line prefix.
  const std::string& detail() const noexcept { return detail_; }

  // Input errors are problems with the files handed to the tool;
  // everything else is a domain error.
  bool is_input_error() const noexcept;

private:
  ErrorKind kind_;
  int line_;
  std::string detail_;
};

}  // namespace atlas
