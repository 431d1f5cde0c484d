#pragma once

#include <stdexcept>
#include <string>

namespace hmsl {

// Base of every error raised by the library. Callers that only need a
// message can catch std::runtime_error.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A mathematical precondition does not hold (singular matrix, degenerate
// line, zero vector, non-squarefree quartic, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// p-adic data could not be certified at the working precision. `needed`
// is a lower bound on the precision that might resolve it, or 0 if unknown.
class PrecisionError : public Error {
 public:
  PrecisionError(const std::string& what, long needed = 0)
      : Error(what), needed_(needed) {}
  long needed() const noexcept { return needed_; }

 private:
  long needed_;
};

// A configuration file or a built-in name could not be interpreted.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// The search exhausted its height bound without producing a line.
class SearchExhausted : public Error {
 public:
  using Error::Error;
};

}  // namespace hmsl
