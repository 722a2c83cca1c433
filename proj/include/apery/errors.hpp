#pragma once

#include <stdexcept>
#include <string>

namespace apery {

/// Precondition violated by caller-supplied data.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A gap list whose complement is not additively closed. Carries the
/// witness pair (s, t): both members, s + t a gap.
class ValidationError : public ArgumentError {
 public:
  ValidationError(const std::string& what, long long s, long long t)
      : ArgumentError(what), s_(s), t_(t) {}
  long long s() const noexcept { return s_; }
  long long t() const noexcept { return t_; }

 private:
  long long s_;
  long long t_;
};

/// Multiplicative relation with a zero denominator.
class UndefinedFraction : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Series evaluation ran out of terms before meeting its tolerance.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double last_term)
      : std::runtime_error(what), last_term_(last_term) {}
  double last_term() const noexcept { return last_term_; }

 private:
  double last_term_;
};

}  // namespace apery
