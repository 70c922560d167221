#pragma once

#include <stdexcept>
#include <string>

namespace hardyop {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A documented precondition was violated (grid mismatch, non-analytic input,
/// point outside the disc, malformed basis, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// The pair (a, I) has a common zero, so no Bezout solution exists.
class CommonZeroError : public Error {
 public:
  using Error::Error;
};

/// A computation finished but failed its residual or conditioning check.
/// `kind()` is a short machine tag such as "IllConditioned" or "RankAmbiguity".
class NumericalError : public Error {
 public:
  NumericalError(std::string kind, const std::string& what)
      : Error(kind + ": " + what), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

/// Invalid run configuration (CLI layer).
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace hardyop
