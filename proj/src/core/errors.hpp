#pragma once

#include <stdexcept>
#include <string>

namespace qbx {

// Error categories surfaced through the C API as status codes.
enum class ErrorKind {
  Arithmetic,   // zero denominator, division by zero
  Domain,       // argument outside the operation's domain
  Lookup,       // unknown presentation or generator
  Structure,    // malformed presentation or Hopf table
  Parse,        // expression syntax
  Incomplete,   // bounded search exhausted
  Internal,     // consistency assertion failed (engine bug)
};

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
  ParseError(const std::string& what, std::size_t position)
      : Error(ErrorKind::Parse, what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

} // namespace qbx
