#pragma once

#include <stdexcept>

namespace dualrail {

/// Base type for everything thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidParameterError : Error { using Error::Error; };
struct InvalidTopologyError : Error { using Error::Error; };
struct NormalizationError : Error { using Error::Error; };
struct UnsupportedClosedFormError : Error { using Error::Error; };
struct NumericalError : Error { using Error::Error; };
struct DimensionError : Error { using Error::Error; };
struct StepSizeError : Error { using Error::Error; };
struct ProtocolExhaustedError : Error { using Error::Error; };
struct CapacityError : Error { using Error::Error; };
struct CalibrationError : Error { using Error::Error; };
struct UnreachableFidelityError : Error { using Error::Error; };
struct FitError : Error { using Error::Error; };
struct ConfigError : Error { using Error::Error; };

}  // namespace dualrail
