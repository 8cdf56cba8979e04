#pragma once

#include <stdexcept>
#include <string>

namespace ontogen {

// Base class for every error the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input that cannot be recovered line-by-line (bad encoding,
// malformed Turtle, unreadable file).
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line = 0)
      : Error(line ? "line " + std::to_string(line) + ": " + message : message),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// A lookup against a schema or model for a name it does not know.
class UnknownNameError : public Error {
 public:
  explicit UnknownNameError(const std::string& what, const std::string& name)
      : Error("unknown " + what + ": " + name), name_(name) {}

  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

}  // namespace ontogen
