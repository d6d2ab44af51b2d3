#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace collabdist {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An edge or fact that pairs an author with itself.
class SelfEdgeError : public Error {
 public:
  using Error::Error;
};

// A collaboration count below 1.
class NonPositiveCountError : public Error {
 public:
  using Error::Error;
};

// A node id outside the graph.
class UnknownNodeError : public Error {
 public:
  using Error::Error;
};

// An author label the fact ledger has never seen.
class UnknownAuthorError : public Error {
 public:
  using Error::Error;
};

// Exact rational arithmetic exceeded its 128-bit component width.
class ArithmeticOverflowError : public Error {
 public:
  ArithmeticOverflowError()
      : Error("exact rational arithmetic overflowed its 128-bit integer width") {}
};

// Path enumeration hit the configured cap.
class LimitExceededError : public Error {
 public:
  using Error::Error;
};

// Two exact facts disagree about the same author pair and metric.
class InconsistentFactError : public Error {
 public:
  using Error::Error;
};

// A chain query crossed a consecutive pair with no usable fact.
class MissingLinkError : public Error {
 public:
  using Error::Error;
};

// Line-oriented input errors carry the 1-based line number.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : Error("line " + std::to_string(line) + ": " + message), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class MalformedLineError : public ParseError {
 public:
  using ParseError::ParseError;
};

class EmptyAuthorListError : public ParseError {
 public:
  using ParseError::ParseError;
};

}  // namespace collabdist
