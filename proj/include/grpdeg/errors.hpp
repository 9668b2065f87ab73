// Error types thrown by the library. Everything derives from grpdeg::Error
// so callers can catch one base and map it to an exit code.
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace grpdeg {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Cayley-table input is ragged or has out-of-range entries.
class MalformedTable : public Error {
 public:
  using Error::Error;
};

// The table fails a group axiom; the message names the offending
// element or triple.
class NotAGroup : public Error {
 public:
  using Error::Error;
};

class InvalidParameter : public Error {
 public:
  using Error::Error;
};

class NotAPermutation : public Error {
 public:
  using Error::Error;
};

// A closure grew past the configured order cap.
class OrderCapExceeded : public Error {
 public:
  using Error::Error;
};

// Two subgroups that must share a parent group do not.
class ParentMismatch : public Error {
 public:
  using Error::Error;
};

class NotNormal : public Error {
 public:
  using Error::Error;
};

// An exact computation would exceed the evaluation budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

// A ⊆ B ⊆ G chain precondition is broken.
class ChainViolation : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace grpdeg
