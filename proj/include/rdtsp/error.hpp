#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rdtsp {

enum class ErrorCode {
    DimensionMismatch,
    NonSymmetric,
    NonZeroDiagonal,
    NegativeDistance,
    TriangleViolation,
    GammaOutOfRange,
    CoordMismatch,
    EmptyInstance,
    InvalidTour,
    EmptySubset,
    InvalidTheta,
    InvalidHistory,
    TooLarge,
    InvalidLine,
    InvalidStar,
    UnknownKind,
    NTooSmall,
    PolicyNondeterministic,
    NoReference,
    NoCoordinates,
    ParseError,
    InvalidConfig,
};

std::string_view to_string(ErrorCode code);

// All library failures surface as this exception; `code()` is the stable
// classification, `what()` carries the human-readable context.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace rdtsp
