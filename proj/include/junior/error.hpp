#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace junior {

enum class ErrorKind {
  NotIsolated,
  NotCalabiYau,
  InvalidInput,
  OutOfRange,
  InvalidFraction,
  Internal,
  TruncationOverflow,
  MissingNode,
  IrregularHole,
  NonConvergent,
  SizeLimit,
  NotAnEdge,
  BoundaryEdge,
  BoundUnstable,
};

std::string_view to_string(ErrorKind kind);

/// Every failure in the library is reported as an Error carrying its kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace junior
