#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace stoprank {

enum class ErrorKind {
  io,                // file could not be opened, read, or written
  encoding,          // input is not valid UTF-8
  parse,             // malformed CSV/JSON/stoplist content
  invalid_argument,  // argument outside its domain (r <= 0, gamma <= 1, ...)
  precondition,      // input shape violates an operation's contract
  degenerate,        // numerically degenerate input (rank-deficient design, ...)
  not_found,         // unknown bundled name, missing key
};

std::string_view to_string(ErrorKind kind) noexcept;

/// The single exception type thrown by the library. `kind()` lets callers
/// (the CLI in particular) map failures to stable machine-readable codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace stoprank
