#pragma once

#include <stdexcept>
#include <string>

namespace fragilemark {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// I/O and codec failures
struct IoError : Error { using Error::Error; };
struct DecodeError : Error { using Error::Error; };
struct EncodeError : Error { using Error::Error; };
struct CodecUnavailable : Error { using Error::Error; };

// Shape/content contract violations
struct DimensionMismatch : Error { using Error::Error; };
struct ImageTooSmall : Error { using Error::Error; };
struct CapacityError : Error { using Error::Error; };
struct MissingAux : Error { using Error::Error; };
struct LandmarkMismatch : Error { using Error::Error; };
struct DegenerateInput : Error { using Error::Error; };

// Classifier-side failures
struct DegenerateData : Error { using Error::Error; };
struct NonFiniteFeature : Error { using Error::Error; };
struct LengthMismatch : Error { using Error::Error; };
struct EmptyTestSet : Error { using Error::Error; };

struct ConfigError : Error { using Error::Error; };

} // namespace fragilemark
