#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cyclotope {

enum class ErrorKind {
  DimensionTooSmall,
  DimensionMismatch,
  EmptySet,
  IndexOutOfRange,
  NotProperSubset,
  InvalidSpectrum,
  InvalidArgument,
  ParseError,
  CapExceeded,
  BudgetExceeded,
};

std::string_view to_string(ErrorKind kind);

/// Every precondition violation in the library surfaces as this exception.
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what);

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

/// An exact computation produced something its invariants rule out; means
/// corrupted input or a library bug, never a user error.
class InternalError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// Smallest dimension the library accepts.
inline constexpr int kMinDimension = 3;

void require_dimension(int t);

}  // namespace cyclotope
