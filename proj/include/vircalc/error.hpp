#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace vircalc {

/// Precondition or invariant violation raised by any vircalc operation.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed polynomial text; `position` is the byte offset of the fault.
struct ParseError : Error {
  ParseError(const std::string& message, std::size_t pos)
      : Error(message + " at position " + std::to_string(pos)), position(pos) {}
  std::size_t position;
};

}  // namespace vircalc
