#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lucas {

enum class ErrorCode {
    CoprimalityViolation,
    ZeroPair,
    BadModulus,
    InvalidArgument,
    NotOddPrime,
    OutOfRange,
    WrongResidueClass,
    Unsupported,
    UnsupportedDiscriminant,
    CapExceeded,
    InexactDivision,
    InternalInvariantViolation,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above.
class LucasError : public std::runtime_error {
public:
    LucasError(ErrorCode code, const std::string& message);

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message);

}  // namespace lucas
