#include "lucas/residue.hpp"

#include "lucas/errors.hpp"

namespace lucas {

ResidueClass::ResidueClass(const Integer& value, const Integer& modulus) : modulus_(modulus) {
    if (modulus <= Integer(1)) {
        fail(ErrorCode::BadModulus, "modulus must exceed 1, got " + modulus.to_string());
    }
    value_ = floor_mod(value, modulus);
}

std::string ResidueClass::to_string() const {
    return value_.to_string() + " mod " + modulus_.to_string();
}

const ResidueClass& residue_of(const ModResult& r) {
    if (const auto* rc = std::get_if<ResidueClass>(&r)) return *rc;
    fail(ErrorCode::InternalInvariantViolation, "expected a residue, got a trivial modulus");
}

std::string to_string(const ModResult& r) {
    if (const auto* rc = std::get_if<ResidueClass>(&r)) return rc->to_string();
    return "trivial (modulus term " + std::get<TrivialModulus>(r).modulus_term.to_string() + ")";
}

}  // namespace lucas
