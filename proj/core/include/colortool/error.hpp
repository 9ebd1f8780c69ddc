#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace colortool {

// Base of every error raised by the library. Callers that only care about
// "bad data" vs. "bug" can catch this one type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidColorError : public Error {
 public:
  using Error::Error;
};

// Malformed hex string; position is the 0-based offending character.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// A palette specification violates its invariants. field() names the
// offending parameter ("cmax", "l1", ...).
class InvalidSpecError : public Error {
 public:
  InvalidSpecError(std::string field, const std::string& what)
      : Error(what), field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

class InvalidCountError : public Error {
 public:
  using Error::Error;
};

class InvalidSeverityError : public Error {
 public:
  using Error::Error;
};

class InvalidInputError : public Error {
 public:
  using Error::Error;
};

class UnsupportedKindError : public Error {
 public:
  using Error::Error;
};

class UnknownPaletteError : public Error {
 public:
  UnknownPaletteError(const std::string& what, std::vector<std::string> suggestions)
      : Error(what), suggestions_(std::move(suggestions)) {}
  const std::vector<std::string>& suggestions() const noexcept { return suggestions_; }

 private:
  std::vector<std::string> suggestions_;
};

// Registry file syntax error, line is 1-based.
class RegistryError : public Error {
 public:
  RegistryError(const std::string& what, std::size_t line)
      : Error(what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace colortool
