#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace slicelab {

enum class ErrorKind {
  NonPrimeP,
  ReducibleModulus,
  UnsupportedSize,
  DimensionMismatch,
  SizeBudgetExceeded,
  DegreeTooLarge,
  NoAdmissibleSlot,
  EpsilonOutOfRange,
  ArityMismatch,
  InvalidEquation,
  InvalidArgument,
  ParseError,
};

const char* to_string(ErrorKind kind);

/// Exception carrying a machine-checkable error kind. The CLI maps
/// SizeBudgetExceeded to exit code 3 and every other kind to 2.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Explicit work caps. Exceeding any of them is an error, never a silent
/// truncation.
struct Budget {
  /// Max number of terms any intermediate multivariate polynomial may hold.
  std::uint64_t max_terms = std::uint64_t{1} << 22;
  /// Max number of tuple evaluations in the search routines, and of
  /// candidate covers in the exhaustive slice-rank oracle.
  std::uint64_t max_evaluations = std::uint64_t{1} << 20;
  /// Max number of domain points for exhaustive verification.
  std::uint64_t max_points = std::uint64_t{1} << 20;

  /// Defaults, with max_evaluations and max_points overridden by the
  /// SLICELAB_BUDGET environment variable when it holds a positive integer.
  static Budget from_environment();
};

inline constexpr const char* kBudgetEnvVar = "SLICELAB_BUDGET";

}  // namespace slicelab
