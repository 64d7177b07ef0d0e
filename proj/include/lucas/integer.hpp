#pragma once

#include <compare>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace lucas {

using Index = std::uint64_t;

/// Per-thread arithmetic counters, updated by every Integer operation.
struct ArithStats {
    std::uint64_t multiplications = 0;  // includes squarings and powm steps
    std::uint64_t additions = 0;        // additions and subtractions
    std::uint64_t divisions = 0;        // quotients and remainders
    std::size_t max_bits = 0;           // widest operand or result seen
};

/// Scoped view of the thread's counters. Counting starts from zero on
/// construction; on destruction the counts are folded back into the
/// enclosing scope so probes nest.
class ArithProbe {
public:
    ArithProbe();
    ~ArithProbe();
    ArithProbe(const ArithProbe&) = delete;
    ArithProbe& operator=(const ArithProbe&) = delete;

    const ArithStats& stats() const;

private:
    ArithStats saved_;
};

/// Signed arbitrary-precision integer.
class Integer {
public:
    Integer() = default;

    template <std::signed_integral T>
    Integer(T v) : v_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)

    template <std::unsigned_integral T>
    Integer(T v) : v_(static_cast<unsigned long>(v)) {}  // NOLINT(google-explicit-constructor)

    explicit Integer(mpz_class v);

    /// Parses a base-10 integer with optional leading '-'. Throws
    /// LucasError(InvalidArgument) on malformed input.
    static Integer from_string(std::string_view text);

    /// 2^bits
    static Integer power_of_two(Index bits);

    /// 2^bits - 1
    static Integer mersenne(Index bits);

    friend Integer operator+(const Integer& a, const Integer& b);
    friend Integer operator-(const Integer& a, const Integer& b);
    friend Integer operator*(const Integer& a, const Integer& b);
    Integer operator-() const;

    Integer& operator+=(const Integer& b);
    Integer& operator-=(const Integer& b);
    Integer& operator*=(const Integer& b);

    friend bool operator==(const Integer& a, const Integer& b);
    friend std::strong_ordering operator<=>(const Integer& a, const Integer& b);

    int sign() const;
    bool is_zero() const { return sign() == 0; }
    bool is_even() const;
    Integer abs() const;
    std::size_t bit_length() const;

    bool fits_u64() const;
    std::uint64_t to_u64() const;  // throws OutOfRange if it does not fit
    bool fits_i64() const;
    std::int64_t to_i64() const;

    std::string to_string() const;

    const mpz_class& raw() const { return v_; }

private:
    mpz_class v_;
};

std::ostream& operator<<(std::ostream& os, const Integer& v);

/// Quotient a / b, throwing InexactDivision if the remainder is nonzero and
/// InternalInvariantViolation if b is zero.
Integer divexact(const Integer& a, const Integer& b);

/// Least nonnegative representative of a modulo |m|. m must be nonzero.
Integer floor_mod(const Integer& a, const Integer& m);

bool divides(const Integer& d, const Integer& a);

Integer gcd(const Integer& a, const Integer& b);

Integer pow(const Integer& base, Index exponent);

/// base^exponent mod m for base >= 0, m > 1, exponent >= 0.
Integer powm(const Integer& base, const Integer& exponent, const Integer& m);

/// Exact rational, always in lowest terms with positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(const Integer& num, const Integer& den);

    Integer numerator() const;
    Integer denominator() const;
    bool is_integer() const;
    std::string to_string() const;  // "a" or "a/b"

    friend Rational operator+(const Rational& a, const Rational& b);
    Rational& operator+=(const Rational& b);
    friend bool operator==(const Rational& a, const Rational& b);

private:
    mpq_class v_;
};

}  // namespace lucas
