#pragma once

#include <stdexcept>
#include <string>

namespace ninf {

/// Stable process exit codes for the error categories below.
enum class ErrorCode : int { Parse = 2, Domain = 3, Resource = 4 };

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string &what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

/// Malformed textual input. `position` is a 0-based offset into the input,
/// or npos when not applicable.
class ParseError : public Error {
public:
  ParseError(const std::string &what, std::size_t position = std::string::npos)
      : Error(ErrorCode::Parse, position == std::string::npos
                                    ? what
                                    : what + " (at position " +
                                          std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

/// Mathematically invalid request (wrong containment, mismatched groups...).
class DomainError : public Error {
public:
  explicit DomainError(const std::string &what)
      : Error(ErrorCode::Domain, what) {}
};

/// A configured size cap was exceeded.
class ResourceError : public Error {
public:
  explicit ResourceError(const std::string &what)
      : Error(ErrorCode::Resource, what) {}
};

} // namespace ninf
