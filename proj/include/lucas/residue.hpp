#pragma once

#include <string>
#include <variant>

#include "lucas/integer.hpp"

namespace lucas {

/// A residue together with its modulus. The value is always the least
/// nonnegative representative and the modulus is always greater than one.
class ResidueClass {
public:
    /// Reduces value modulo modulus. Throws BadModulus when modulus <= 1.
    ResidueClass(const Integer& value, const Integer& modulus);

    const Integer& value() const { return value_; }
    const Integer& modulus() const { return modulus_; }
    bool is_zero() const { return value_.is_zero(); }

    std::string to_string() const;  // "value mod modulus"

    friend bool operator==(const ResidueClass&, const ResidueClass&) = default;

private:
    Integer value_;
    Integer modulus_;
};

/// Outcome for a congruence whose modulus term has absolute value <= 1.
/// Such a congruence is vacuous.
struct TrivialModulus {
    Integer modulus_term;

    friend bool operator==(const TrivialModulus&, const TrivialModulus&) = default;
};

using ModResult = std::variant<ResidueClass, TrivialModulus>;

inline bool is_trivial(const ModResult& r) { return std::holds_alternative<TrivialModulus>(r); }

/// Throws InternalInvariantViolation if r is trivial.
const ResidueClass& residue_of(const ModResult& r);

std::string to_string(const ModResult& r);

}  // namespace lucas
