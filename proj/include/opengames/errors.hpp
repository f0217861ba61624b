#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace og {

/// Base of every error the engine raises.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Boundary disagreement: composing games whose wire lists do not match,
/// a function applied outside its domain, a context of the wrong shape.
class TypeMismatch : public Error {
 public:
  using Error::Error;
};

/// An enumeration would exceed the configured evaluation cap.
class SizeGuardExceeded : public Error {
 public:
  SizeGuardExceeded(std::string what, std::size_t requested, std::size_t cap);

  std::size_t requested() const { return requested_; }
  std::size_t cap() const { return cap_; }

 private:
  std::size_t requested_;
  std::size_t cap_;
};

class EmptyPayoffOrder : public Error {
 public:
  using Error::Error;
};

class UnknownName : public Error {
 public:
  using Error::Error;
};

/// Source position, 1-based.
struct SourceLocation {
  std::size_t line = 0;
  std::size_t column = 0;
};

class LexError : public Error {
 public:
  LexError(SourceLocation where, const std::string& message);
  SourceLocation where() const { return where_; }

 private:
  SourceLocation where_;
};

class ParseError : public Error {
 public:
  ParseError(SourceLocation where, const std::string& found,
             std::vector<std::string> expected);
  SourceLocation where() const { return where_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  SourceLocation where_;
  std::vector<std::string> expected_;
};

}  // namespace og
