#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace leavitt {

/// Root of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An unknown vertex or bundle name, or a malformed edge reference.
class NameError : public Error {
 public:
  using Error::Error;
};

/// A documented precondition was violated by the caller.
class ContractError : public Error {
 public:
  using Error::Error;
};

/// The input lies outside the class of graphs an operation can decide
/// (cycles, omega-bundles, ...). The message is the user-facing reason.
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

/// A derived graph would need infinitely many vertices or edges.
class NotFinitelyPresentable : public UnsupportedError {
 public:
  using UnsupportedError::UnsupportedError;
};

/// An enumeration guard was exceeded.
class SizeError : public Error {
 public:
  using Error::Error;
};

/// Two independent computations that must agree did not.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

/// Malformed or schema-invalid graph document. `line` is 1-based, 0 when
/// the position is unknown.
class DocumentError : public Error {
 public:
  DocumentError(const std::string& what, std::size_t line)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace leavitt
