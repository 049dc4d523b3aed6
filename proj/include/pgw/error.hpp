#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pgw {

enum class ErrorKind {
  ZeroInverse,
  ContextMismatch,
  NotInvertible,
  ShapeError,
  OrderCapExceeded,
  OrderNotInContext,
  ClosureCapExceeded,
  NotAPGroup,
  BruteForceCapExceeded,
  NotASubset,
  NotNormal,
  ZeroPolynomial,
  NotUnimodular,
  UnknownId,
  ParseError,
  ValidationError,
};

std::string_view to_string(ErrorKind kind) noexcept;

// All engine failures are reported through this one exception type; callers
// that need to distinguish failures switch on kind().
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace pgw
