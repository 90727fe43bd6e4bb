#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pmt {

enum class ErrorKind {
  InvalidArgument,
  InvalidSpec,
  BranchCut,
  ZeroBase,
  NoConvergence,
  IntegrandFailure,
  InvalidScale,
  NearPole,
  Pole,
  DenominatorUnderflow,
  SigmaOutOfWindow,
  NearPositiveInteger,
  PoleAtOne,
  EtaZetaConversionSingularity,
  TauOutOfRange,
  ExtrapolationDivergence,
  UnknownEntry,
  PropertyViolation,
  SigmaExceedsDomain,
  InvalidOrder,
  ZeroArgument,
  NoSampler,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries a machine-readable kind so the
/// CLI can map it onto exit codes and structured error output.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

  /// True for failures of the numerics (as opposed to bad input).
  bool is_numerical() const noexcept;

 private:
  ErrorKind kind_;
};

}  // namespace pmt
