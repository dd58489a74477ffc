#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace egosim {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text. `line()` is 1-based, 0 when not tied to a line.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class EmptyGraphError : public Error {
 public:
  EmptyGraphError() : Error("graph has no nodes") {}
};

/// Unknown node index or label, or an argument outside its valid range.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Raised for nodes whose ego network has zero total degree (isolated nodes).
class UndefinedSignatureError : public Error {
 public:
  explicit UndefinedSignatureError(const std::string& label)
      : Error("signature undefined for node '" + label + "' (degree 0)"), label_(label) {}

  const std::string& label() const noexcept { return label_; }

 private:
  std::string label_;
};

class DatasetError : public Error {
 public:
  using Error::Error;
};

}  // namespace egosim
