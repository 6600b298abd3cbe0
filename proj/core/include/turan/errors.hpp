#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace turan {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Invalid parameters: the message names the violated constraint.
class ParamError : public Error {
 public:
  explicit ParamError(const std::string& what) : Error(what) {}
};

// A configured desk-scale limit was exceeded. The message carries the limit
// and the offending quantity so callers can decide whether to raise it.
class LimitError : public Error {
 public:
  LimitError(const std::string& what, std::uint64_t limit, std::uint64_t actual)
      : Error(what), limit_(limit), actual_(actual) {}
  std::uint64_t limit() const { return limit_; }
  std::uint64_t actual() const { return actual_; }

 private:
  std::uint64_t limit_;
  std::uint64_t actual_;
};

// Exhaustive search ran out of node budget. Carries the best bounds proved
// so far, so a caller can still report a bracketing interval.
class BudgetError : public Error {
 public:
  BudgetError(const std::string& what, long long lower, long long upper)
      : Error(what), lower_(lower), upper_(upper) {}
  long long lower_bound() const { return lower_; }
  long long upper_bound() const { return upper_; }

 private:
  long long lower_;
  long long upper_;
};

// A structural invariant that should be unreachable was violated (e.g. a
// zero-degree attachment set during a distribution build). Indicates a bug
// or corrupted input, not a user mistake.
class InternalError : public Error {
 public:
  explicit InternalError(const std::string& what) : Error(what) {}
};

}  // namespace turan
