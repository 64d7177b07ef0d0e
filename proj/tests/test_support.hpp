#pragma once

#include <functional>

#include <gtest/gtest.h>

#include "lucas/errors.hpp"

namespace lucas::testing {

/// Error code raised by f; records a test failure if nothing is thrown.
inline ErrorCode code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const LucasError& e) {
        return e.code();
    }
    ADD_FAILURE() << "expected a LucasError";
    return ErrorCode::InternalInvariantViolation;
}

}  // namespace lucas::testing
