#pragma once

#include <stdexcept>
#include <string>

namespace polarwords {

/// Raised when a size parameter lies outside the range an operation supports.
/// The message always names the guard, e.g. "enumerate_words: n=15 outside 1 <= n <= 14".
class GuardError : public std::out_of_range {
 public:
  GuardError(const std::string& op, long long value, long long lo, long long hi)
      : std::out_of_range(op + ": n=" + std::to_string(value) + " outside " +
                          std::to_string(lo) + " <= n <= " + std::to_string(hi)) {}
};

class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Erasing a letter produced a word that breaks the growth rule.
class InvalidResult : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Internal consistency failure. Seeing one of these is a bug.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline void check_guard(const char* op, long long n, long long lo, long long hi) {
  if (n < lo || n > hi) throw GuardError(op, n, lo, hi);
}

}  // namespace polarwords
