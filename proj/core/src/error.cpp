#include "stoprank/error.hpp"

namespace stoprank {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::io: return "io";
    case ErrorKind::encoding: return "encoding";
    case ErrorKind::parse: return "parse";
    case ErrorKind::invalid_argument: return "invalid_argument";
    case ErrorKind::precondition: return "precondition";
    case ErrorKind::degenerate: return "degenerate";
    case ErrorKind::not_found: return "not_found";
  }
  return "unknown";
}

}  // namespace stoprank
