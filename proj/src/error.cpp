#include "slicelab/error.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>

namespace slicelab {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonPrimeP: return "NonPrimeP";
    case ErrorKind::ReducibleModulus: return "ReducibleModulus";
    case ErrorKind::UnsupportedSize: return "UnsupportedSize";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::SizeBudgetExceeded: return "SizeBudgetExceeded";
    case ErrorKind::DegreeTooLarge: return "DegreeTooLarge";
    case ErrorKind::NoAdmissibleSlot: return "NoAdmissibleSlot";
    case ErrorKind::EpsilonOutOfRange: return "EpsilonOutOfRange";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::InvalidEquation: return "InvalidEquation";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

Budget Budget::from_environment() {
  Budget budget;
  const char* raw = std::getenv(kBudgetEnvVar);
  if (raw == nullptr) return budget;
  std::uint64_t value = 0;
  const char* end = raw + std::strlen(raw);
  auto [ptr, ec] = std::from_chars(raw, end, value);
  if (ec == std::errc{} && ptr == end && value > 0) {
    budget.max_evaluations = value;
    budget.max_points = value;
  }
  return budget;
}

}  // namespace slicelab
