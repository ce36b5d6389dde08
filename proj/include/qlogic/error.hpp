#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qlogic {

enum class ErrorKind {
  DimensionMismatch,
  InvalidArgument,
  NotHermitian,
  NotProjector,
  NotNormalized,
  ZeroProbabilityBranch,
  RankAmbiguous,
  PreconditionViolation,
  IllegalValueForSystem,
  NoState,
  UnboundAtom,
  ParseError,
  ConfigInvalid,
  IndexOutOfRange,
};

std::string_view to_string(ErrorKind kind);

/// Every library failure is reported through this one exception type; the
/// kind tells callers (the CLI in particular) how to classify it.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& message);

}  // namespace qlogic
