#include "lucas/errors.hpp"

namespace lucas {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::CoprimalityViolation: return "CoprimalityViolation";
        case ErrorCode::ZeroPair: return "ZeroPair";
        case ErrorCode::BadModulus: return "BadModulus";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::NotOddPrime: return "NotOddPrime";
        case ErrorCode::OutOfRange: return "OutOfRange";
        case ErrorCode::WrongResidueClass: return "WrongResidueClass";
        case ErrorCode::Unsupported: return "Unsupported";
        case ErrorCode::UnsupportedDiscriminant: return "UnsupportedDiscriminant";
        case ErrorCode::CapExceeded: return "CapExceeded";
        case ErrorCode::InexactDivision: return "InexactDivision";
        case ErrorCode::InternalInvariantViolation: return "InternalInvariantViolation";
    }
    return "Unknown";
}

LucasError::LucasError(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

void fail(ErrorCode code, const std::string& message) { throw LucasError(code, message); }

}  // namespace lucas
