#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sepchordal {

class error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input. `offset` is the zero-based byte position of the problem.
class parse_error : public error {
public:
  parse_error(const std::string& message, std::size_t offset)
      : error(message + " at byte " + std::to_string(offset)), message_(message), offset_(offset) {}
  std::size_t offset() const { return offset_; }
  const std::string& message() const { return message_; }
private:
  std::string message_;
  std::size_t offset_;
};

/// Precondition violation: out-of-range vertex, non-chordal input to a chordal-only routine, ...
class domain_error : public error {
public:
  using error::error;
};

/// Input size beyond what the library handles.
class unsupported_size : public error {
public:
  using error::error;
};

}  // namespace sepchordal
