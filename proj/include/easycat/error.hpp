#pragma once

#include <stdexcept>
#include <string>

namespace easycat {

// Base of every error raised by the library. Callers that only care about
// "something was rejected" can catch this; the CLI maps subclasses to exit
// codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// partition construction and parsing
class OverlapError : public Error {
  using Error::Error;
};
class CoverageError : public Error {
  using Error::Error;
};
class RangeError : public Error {
  using Error::Error;
};
class SyntaxError : public Error {
  using Error::Error;
};

// category operations
class ArityMismatch : public Error {
  using Error::Error;
};
class EmptyRowError : public Error {
  using Error::Error;
};
class CycleOnTwoRows : public Error {
  using Error::Error;
};

// Resource limits. These are budget problems, not logical failures, and the
// CLI reports them with a distinct exit status.
class LimitError : public Error {
  using Error::Error;
};
class CapExceeded : public LimitError {
  using LimitError::LimitError;
};
class BudgetError : public LimitError {
  using LimitError::LimitError;
};
class MemoryCap : public LimitError {
  using LimitError::LimitError;
};
class EnumerationTooLarge : public LimitError {
  using LimitError::LimitError;
};

// catalog
class BadParam : public Error {
  using Error::Error;
};
class NoPredicate : public Error {
  using Error::Error;
};
class UnknownName : public Error {
  using Error::Error;
};

// closure / classification
class NotNoncrossing : public Error {
  using Error::Error;
};

// linear maps
class IndexRange : public Error {
  using Error::Error;
};

// moments
class UndefinedBlockValue : public Error {
  using Error::Error;
};

}  // namespace easycat
