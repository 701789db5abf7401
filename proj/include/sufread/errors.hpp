#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sufread {

/// Base class of every domain error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An automaton failed structural validation.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A state name or id that the automaton does not declare.
class UnknownState : public Error {
 public:
  using Error::Error;
};

/// Two automata over different alphabets were compared.
class AlphabetMismatch : public Error {
 public:
  using Error::Error;
};

/// A simple-word computation would produce more words than allowed.
class CapExceeded : public Error {
 public:
  CapExceeded(std::size_t cap)
      : Error("simple-word cap exceeded (cap = " + std::to_string(cap) + ")"), cap_(cap) {}
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t cap_;
};

/// A desk-scale guard (state count, alphabet size, search bound) was exceeded.
class GuardExceeded : public Error {
 public:
  using Error::Error;
};

/// An operation received an input violating its precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Text-format error with a 1-based position.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
              message),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace sufread
