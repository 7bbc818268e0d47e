#pragma once

#include <stdexcept>
#include <string>

namespace pfb {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A format or parameter set violates one of its invariants. The message
/// names the violated invariant, e.g. "n >= 1".
class InvalidFormat : public Error {
 public:
  explicit InvalidFormat(const std::string& invariant)
      : Error("invalid format: " + invariant), invariant_(invariant) {}
  const std::string& invariant() const noexcept { return invariant_; }

 private:
  std::string invariant_;
};

class RecursionExhausted : public Error {
 public:
  using Error::Error;
};

class InvalidComplex : public Error {
 public:
  using Error::Error;
};

class InconsistentFaces : public Error {
 public:
  using Error::Error;
};

class NotSurjective : public Error {
 public:
  using Error::Error;
};

}  // namespace pfb
