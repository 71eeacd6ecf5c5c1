#pragma once

#include <stdexcept>
#include <string>

namespace turnpda {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A size budget (bits, subset states, string length) would be exceeded.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// Malformed input document (JSON automaton or Turing machine).
class ParseError : public Error {
 public:
  enum class Kind { MalformedDocument, UndeclaredSymbol, DuplicateState };

  ParseError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// A trace whose consecutive configurations are not related by its recorded moves.
class InconsistentTrace : public Error {
 public:
  using Error::Error;
};

}  // namespace turnpda
