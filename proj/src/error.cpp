#include "rdtsp/error.hpp"

namespace rdtsp {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::NonSymmetric: return "NonSymmetric";
        case ErrorCode::NonZeroDiagonal: return "NonZeroDiagonal";
        case ErrorCode::NegativeDistance: return "NegativeDistance";
        case ErrorCode::TriangleViolation: return "TriangleViolation";
        case ErrorCode::GammaOutOfRange: return "GammaOutOfRange";
        case ErrorCode::CoordMismatch: return "CoordMismatch";
        case ErrorCode::EmptyInstance: return "EmptyInstance";
        case ErrorCode::InvalidTour: return "InvalidTour";
        case ErrorCode::EmptySubset: return "EmptySubset";
        case ErrorCode::InvalidTheta: return "InvalidTheta";
        case ErrorCode::InvalidHistory: return "InvalidHistory";
        case ErrorCode::TooLarge: return "TooLarge";
        case ErrorCode::InvalidLine: return "InvalidLine";
        case ErrorCode::InvalidStar: return "InvalidStar";
        case ErrorCode::UnknownKind: return "UnknownKind";
        case ErrorCode::NTooSmall: return "NTooSmall";
        case ErrorCode::PolicyNondeterministic: return "PolicyNondeterministic";
        case ErrorCode::NoReference: return "NoReference";
        case ErrorCode::NoCoordinates: return "NoCoordinates";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::InvalidConfig: return "InvalidConfig";
    }
    return "Unknown";
}

}  // namespace rdtsp
