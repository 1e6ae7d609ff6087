#pragma once

#include <stdexcept>
#include <string>

namespace kp {

/// Base class for all contract violations raised by the library.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct SymmetryViolation : Error { using Error::Error; };
struct NotZeroXMean : Error { using Error::Error; };
struct ZeroXFrequency : Error { using Error::Error; };
struct BandOutOfRange : Error { using Error::Error; };
struct ZeroField : Error { using Error::Error; };
struct UnboundedSymbol : Error { using Error::Error; };
struct BandsTooClose : Error { using Error::Error; };
struct DomainTooSmall : Error { using Error::Error; };
struct ParamConstraintViolated : Error { using Error::Error; };
struct PeriodMismatch : Error { using Error::Error; };
struct SingularDenominator : Error { using Error::Error; };
struct NonFinite : Error { using Error::Error; };
struct ConfigError : Error { using Error::Error; };
struct UsageError : Error { using Error::Error; };
struct NotAdmissible : Error { using Error::Error; };
struct RecirculationWindowExceeded : Error { using Error::Error; };
struct DegenerateFrequencies : Error { using Error::Error; };
struct IdenticalData : Error { using Error::Error; };

}  // namespace kp
