#include "lucas/integer.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <ostream>

#include "lucas/errors.hpp"

namespace lucas {

namespace {

thread_local ArithStats t_stats;

std::size_t bits_of(const mpz_class& v) { return mpz_sizeinbase(v.get_mpz_t(), 2); }

void note(const mpz_class& v) { t_stats.max_bits = std::max(t_stats.max_bits, bits_of(v)); }

void note_add(const mpz_class& a, const mpz_class& b, const mpz_class& r) {
    ++t_stats.additions;
    note(a);
    note(b);
    note(r);
}

void note_mul(const mpz_class& a, const mpz_class& b, const mpz_class& r) {
    ++t_stats.multiplications;
    note(a);
    note(b);
    note(r);
}

void note_div(const mpz_class& a, const mpz_class& b) {
    ++t_stats.divisions;
    note(a);
    note(b);
}

}  // namespace

ArithProbe::ArithProbe() : saved_(t_stats) { t_stats = ArithStats{}; }

ArithProbe::~ArithProbe() {
    saved_.multiplications += t_stats.multiplications;
    saved_.additions += t_stats.additions;
    saved_.divisions += t_stats.divisions;
    saved_.max_bits = std::max(saved_.max_bits, t_stats.max_bits);
    t_stats = saved_;
}

const ArithStats& ArithProbe::stats() const { return t_stats; }

Integer::Integer(mpz_class v) : v_(std::move(v)) { note(v_); }

Integer Integer::from_string(std::string_view text) {
    std::string s(text);
    std::size_t digits_from = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (s.size() == digits_from ||
        !std::all_of(s.begin() + static_cast<std::ptrdiff_t>(digits_from), s.end(),
                     [](char c) { return c >= '0' && c <= '9'; })) {
        fail(ErrorCode::InvalidArgument, "not a decimal integer: '" + s + "'");
    }
    if (s[0] == '+') s.erase(0, 1);
    return Integer(mpz_class(s, 10));
}

Integer Integer::power_of_two(Index bits) {
    mpz_class r;
    mpz_setbit(r.get_mpz_t(), bits);
    return Integer(std::move(r));
}

Integer Integer::mersenne(Index bits) {
    mpz_class r;
    mpz_setbit(r.get_mpz_t(), bits);
    r -= 1;
    ++t_stats.additions;
    return Integer(std::move(r));
}

Integer operator+(const Integer& a, const Integer& b) {
    Integer r;
    r.v_ = a.v_ + b.v_;
    note_add(a.v_, b.v_, r.v_);
    return r;
}

Integer operator-(const Integer& a, const Integer& b) {
    Integer r;
    r.v_ = a.v_ - b.v_;
    note_add(a.v_, b.v_, r.v_);
    return r;
}

Integer operator*(const Integer& a, const Integer& b) {
    Integer r;
    r.v_ = a.v_ * b.v_;
    note_mul(a.v_, b.v_, r.v_);
    return r;
}

Integer Integer::operator-() const {
    Integer r;
    r.v_ = -v_;
    return r;
}

Integer& Integer::operator+=(const Integer& b) { return *this = *this + b; }
Integer& Integer::operator-=(const Integer& b) { return *this = *this - b; }
Integer& Integer::operator*=(const Integer& b) { return *this = *this * b; }

bool operator==(const Integer& a, const Integer& b) { return cmp(a.v_, b.v_) == 0; }

std::strong_ordering operator<=>(const Integer& a, const Integer& b) {
    int c = cmp(a.v_, b.v_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

int Integer::sign() const { return sgn(v_); }

bool Integer::is_even() const { return mpz_even_p(v_.get_mpz_t()) != 0; }

Integer Integer::abs() const {
    Integer r;
    r.v_ = ::abs(v_);
    return r;
}

std::size_t Integer::bit_length() const { return sign() == 0 ? 0 : bits_of(v_); }

bool Integer::fits_u64() const {
    static_assert(sizeof(unsigned long) == 8);
    return mpz_fits_ulong_p(v_.get_mpz_t()) != 0 && sign() >= 0;
}

std::uint64_t Integer::to_u64() const {
    if (!fits_u64()) fail(ErrorCode::OutOfRange, to_string() + " does not fit in 64 bits");
    return mpz_get_ui(v_.get_mpz_t());
}

bool Integer::fits_i64() const { return mpz_fits_slong_p(v_.get_mpz_t()) != 0; }

std::int64_t Integer::to_i64() const {
    if (!fits_i64()) fail(ErrorCode::OutOfRange, to_string() + " does not fit in int64");
    return mpz_get_si(v_.get_mpz_t());
}

std::string Integer::to_string() const { return v_.get_str(10); }

std::ostream& operator<<(std::ostream& os, const Integer& v) { return os << v.to_string(); }

Integer divexact(const Integer& a, const Integer& b) {
    if (b.is_zero()) fail(ErrorCode::InternalInvariantViolation, "division by zero");
    note_div(a.raw(), b.raw());
    mpz_class q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.raw().get_mpz_t(), b.raw().get_mpz_t());
    if (sgn(r) != 0) {
        fail(ErrorCode::InexactDivision, a.to_string() + " is not divisible by " + b.to_string());
    }
    return Integer(std::move(q));
}

Integer floor_mod(const Integer& a, const Integer& m) {
    if (m.is_zero()) fail(ErrorCode::BadModulus, "modulus is zero");
    note_div(a.raw(), m.raw());
    mpz_class r;
    mpz_mod(r.get_mpz_t(), a.raw().get_mpz_t(), m.raw().get_mpz_t());
    return Integer(std::move(r));
}

bool divides(const Integer& d, const Integer& a) {
    if (d.is_zero()) return a.is_zero();
    note_div(a.raw(), d.raw());
    return mpz_divisible_p(a.raw().get_mpz_t(), d.raw().get_mpz_t()) != 0;
}

Integer gcd(const Integer& a, const Integer& b) {
    note_div(a.raw(), b.raw());
    mpz_class r;
    mpz_gcd(r.get_mpz_t(), a.raw().get_mpz_t(), b.raw().get_mpz_t());
    return Integer(std::move(r));
}

Integer pow(const Integer& base, Index exponent) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), base.raw().get_mpz_t(), exponent);
    // Square-and-multiply cost, counted the same way powm is.
    t_stats.multiplications += exponent == 0 ? 0 : 2 * static_cast<std::uint64_t>(std::bit_width(exponent));
    note(base.raw());
    return Integer(std::move(r));
}

Integer powm(const Integer& base, const Integer& exponent, const Integer& m) {
    if (m <= Integer(1)) fail(ErrorCode::BadModulus, "modulus must exceed 1");
    if (exponent.sign() < 0) fail(ErrorCode::InternalInvariantViolation, "negative exponent");
    if (base.sign() < 0) fail(ErrorCode::InvalidArgument, "powm base must be nonnegative");
    mpz_class r;
    mpz_powm(r.get_mpz_t(), base.raw().get_mpz_t(), exponent.raw().get_mpz_t(), m.raw().get_mpz_t());
    t_stats.multiplications += 2 * static_cast<std::uint64_t>(exponent.bit_length());
    note(base.raw());
    // Intermediates are products of two residues.
    t_stats.max_bits = std::max(t_stats.max_bits, 2 * bits_of(m.raw()));
    return Integer(std::move(r));
}

Rational::Rational(const Integer& num, const Integer& den) {
    if (den.is_zero()) fail(ErrorCode::InvalidArgument, "zero denominator");
    v_ = mpq_class(num.raw(), den.raw());
    v_.canonicalize();
}

Integer Rational::numerator() const { return Integer(mpz_class(v_.get_num())); }
Integer Rational::denominator() const { return Integer(mpz_class(v_.get_den())); }
bool Rational::is_integer() const { return v_.get_den() == 1; }
std::string Rational::to_string() const { return v_.get_str(10); }

Rational operator+(const Rational& a, const Rational& b) {
    Rational r;
    r.v_ = a.v_ + b.v_;
    return r;
}

Rational& Rational::operator+=(const Rational& b) { return *this = *this + b; }

bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }

}  // namespace lucas
