#include "pmt/errors.hpp"

namespace pmt {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::InvalidSpec: return "InvalidSpec";
    case ErrorKind::BranchCut: return "BranchCut";
    case ErrorKind::ZeroBase: return "ZeroBase";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::IntegrandFailure: return "IntegrandFailure";
    case ErrorKind::InvalidScale: return "InvalidScale";
    case ErrorKind::NearPole: return "NearPole";
    case ErrorKind::Pole: return "Pole";
    case ErrorKind::DenominatorUnderflow: return "DenominatorUnderflow";
    case ErrorKind::SigmaOutOfWindow: return "SigmaOutOfWindow";
    case ErrorKind::NearPositiveInteger: return "NearPositiveInteger";
    case ErrorKind::PoleAtOne: return "PoleAtOne";
    case ErrorKind::EtaZetaConversionSingularity: return "EtaZetaConversionSingularity";
    case ErrorKind::TauOutOfRange: return "TauOutOfRange";
    case ErrorKind::ExtrapolationDivergence: return "ExtrapolationDivergence";
    case ErrorKind::UnknownEntry: return "UnknownEntry";
    case ErrorKind::PropertyViolation: return "PropertyViolation";
    case ErrorKind::SigmaExceedsDomain: return "SigmaExceedsDomain";
    case ErrorKind::InvalidOrder: return "InvalidOrder";
    case ErrorKind::ZeroArgument: return "ZeroArgument";
    case ErrorKind::NoSampler: return "NoSampler";
  }
  return "Unknown";
}

bool Error::is_numerical() const noexcept {
  switch (kind_) {
    case ErrorKind::NoConvergence:
    case ErrorKind::IntegrandFailure:
    case ErrorKind::DenominatorUnderflow:
    case ErrorKind::ExtrapolationDivergence:
    case ErrorKind::EtaZetaConversionSingularity:
      return true;
    default:
      return false;
  }
}

}  // namespace pmt
