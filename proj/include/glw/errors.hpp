#pragma once

#include <stdexcept>
#include <string>

namespace glw {

/// Malformed textual input. The message names the offending token.
class ParseError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// An operation was called outside its domain (bad precondition).
class DomainError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A configured size guard was exceeded. Distinct from a wrong answer.
class ResourceLimitError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace glw
