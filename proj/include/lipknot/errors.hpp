#pragma once
// Error hierarchy: ParseError for text inputs, ValidationError for structural
// problems in diagrams/germs, DomainError for violated operation preconditions.
#include <stdexcept>
#include <string>

namespace lipknot {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : Error {
  explicit ParseError(const std::string& msg, std::size_t pos = std::string::npos)
      : Error(pos == std::string::npos ? msg : msg + " (at position " + std::to_string(pos) + ")"),
        position(pos) {}
  std::size_t position;
};

struct ValidationError : Error {
  using Error::Error;
};

struct DomainError : Error {
  using Error::Error;
};

}  // namespace lipknot
