#include "hillspec/error.hpp"

#include <algorithm>
#include <cstdlib>

#include "hillspec/types.hpp"

namespace hillspec {

int IndexRange::max_abs() const {
  if (empty()) return 0;
  return std::max(std::abs(lo), std::abs(hi));
}

std::string_view error_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NonConvergence: return "NonConvergence";
    case ErrorKind::RootEscape: return "RootEscape";
    case ErrorKind::VanishingDenominator: return "VanishingDenominator";
    case ErrorKind::SeriesDiverging: return "SeriesDiverging";
    case ErrorKind::LeftDisk: return "LeftDisk";
    case ErrorKind::UnsupportedPotential: return "UnsupportedPotential";
    case ErrorKind::DegenerateCluster: return "DegenerateCluster";
    case ErrorKind::InsufficientData: return "InsufficientData";
    case ErrorKind::NoisyData: return "NoisyData";
    case ErrorKind::ArcBroken: return "ArcBroken";
    case ErrorKind::InconsistentIndexing: return "InconsistentIndexing";
    case ErrorKind::PrecisionLoss: return "PrecisionLoss";
    case ErrorKind::Io: return "Io";
  }
  return "Unknown";
}

void raise(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace hillspec
