#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hillspec {

enum class ErrorKind {
  InvalidArgument,
  NonConvergence,
  RootEscape,
  VanishingDenominator,
  SeriesDiverging,
  LeftDisk,
  UnsupportedPotential,
  DegenerateCluster,
  InsufficientData,
  NoisyData,
  ArcBroken,
  InconsistentIndexing,
  PrecisionLoss,
  Io,
};

std::string_view error_name(ErrorKind kind);

/// Every numerical failure in the library is reported through this type.
/// `name()` is the stable identifier written into CLI error objects.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }
  [[nodiscard]] std::string_view name() const { return error_name(kind_); }

 private:
  ErrorKind kind_;
};

[[noreturn]] void raise(ErrorKind kind, const std::string& message);

}  // namespace hillspec
