#include "lucas/congruence.hpp"

#include <array>
#include <numeric>
#include <string>
#include <utility>

#include "lucas/errors.hpp"

namespace lucas {

namespace {

/// numerator / 2, asserted to be a nonnegative integer.
Integer half_exponent(const Integer& numerator) {
    if (!numerator.is_even()) {
        fail(ErrorCode::InternalInvariantViolation, "half-integral exponent " + numerator.to_string() + "/2");
    }
    if (numerator.sign() < 0) {
        fail(ErrorCode::InternalInvariantViolation, "negative exponent " + numerator.to_string() + "/2");
    }
    return divexact(numerator, 2);
}

/// (-1)^(numerator/2) with the same integrality checks.
int minus_one_power(const Integer& numerator) {
    Integer e = half_exponent(numerator);
    return e.is_even() ? 1 : -1;
}

void require_positive(Index v, const char* name) {
    if (v == 0) fail(ErrorCode::InvalidArgument, std::string(name) + " must be >= 1");
}

bool is_odd(Index x) { return parity_indicator(x).value == 0; }

/// |U_k| if it exceeds 1, otherwise nullopt.
std::optional<Integer> term_modulus(const Integer& term) {
    Integer m = term.abs();
    if (m <= Integer(1)) return std::nullopt;
    return m;
}

}  // namespace

ParityIndicator parity_indicator(Index x) { return ParityIndicator{x % 2 == 0 ? 1U : 0U}; }

std::string_view to_string(CaseTag tag) {
    switch (tag) {
        case CaseTag::OddN: return "ODD_N";
        case CaseTag::EvenNOddK: return "EVEN_N_ODD_K";
        case CaseTag::BothEvenMixedQuotients: return "BOTH_EVEN_MIXED_QUOTIENTS";
        case CaseTag::BothEvenOddQuotients: return "BOTH_EVEN_ODD_QUOTIENTS";
    }
    return "UNKNOWN";
}

CaseTag classify_case(Index n, Index k) {
    require_positive(n, "n");
    require_positive(k, "k");
    if (n % 2 == 1) return CaseTag::OddN;
    if (k % 2 == 1) return CaseTag::EvenNOddK;
    const Index d = std::gcd(n, k);
    if ((n / d) % 2 == 1 && (k / d) % 2 == 1) return CaseTag::BothEvenOddQuotients;
    return CaseTag::BothEvenMixedQuotients;
}

ResidueClass signed_pow_mod(const Integer& base, const Integer& exponent, const Integer& m) {
    Integer magnitude = powm(base.abs(), exponent, m);
    if (base.sign() < 0 && !exponent.is_even()) magnitude = -magnitude;
    return ResidueClass(magnitude, m);
}

ResidueClass exact_pow_mod(const Integer& base, Index exponent, const Integer& m) {
    return ResidueClass(pow(base, exponent), m);
}

ModResult lemma1_rhs(const LucasParams& params, Index k, Index n) {
    require_positive(k, "k");
    const Integer uk = u_at(params, k);
    const auto m = term_modulus(uk);
    if (!m) return TrivialModulus{uk};
    if (n == 0) return ResidueClass(0, *m);

    const Integer kk(k);
    const Integer nn(n);
    if (is_odd(n)) {
        auto q_part = signed_pow_mod(params.q(), half_exponent(kk * (nn - 1)), *m);
        return ResidueClass(nn * q_part.value(), *m);
    }
    auto q_part = signed_pow_mod(params.q(), half_exponent(kk * (nn - 2)), *m);
    return ResidueClass(nn * u_at(params, k + 1) * q_part.value(), *m);
}

ModResult lemma2_rhs(const LucasParams& params, Index k, Index n) {
    const Integer uk = u_at(params, k);
    const auto m = term_modulus(uk);
    if (!m) return TrivialModulus{uk};

    const Integer kk(k);
    const Integer nn(n);
    if (is_odd(n)) {
        auto q_part = signed_pow_mod(params.q(), half_exponent(kk * (nn - 1)), *m);
        return ResidueClass(u_at(params, k + 1) * q_part.value(), *m);
    }
    return signed_pow_mod(params.q(), half_exponent(kk * nn), *m);
}

ModResult corollary_ratio_rhs(const LucasParams& params, Index k, Index n) {
    require_positive(k, "k");
    const Integer uk = u_at(params, k);
    const auto m = term_modulus(uk);
    if (!m) return TrivialModulus{uk};
    // n = 0
    if (n == 0) return ResidueClass(0, *m);

    const Index a = parity_indicator(n).value;
    const Integer next_power = pow(u_at(params, k + 1), a);
    const Integer exponent = half_exponent(Integer(k) * (Integer(n) - Integer(a) - 1));
    const auto q_part = signed_pow_mod(params.q(), exponent, *m);
    return ResidueClass(Integer(n) * next_power * q_part.value(), *m);
}

namespace {

/// (U_{k+1})^{1-a(n)} Q^{k(n+a(n)-1)/2} mod m
Integer shift_factor(const LucasParams& params, Index k, Index n, const Integer& m) {
    const Index a = parity_indicator(n).value;
    const Integer next_power = pow(u_at(params, k + 1), 1 - a);
    const Integer exponent = half_exponent(Integer(k) * (Integer(n) + Integer(a) - 1));
    return next_power * signed_pow_mod(params.q(), exponent, m).value();
}

}  // namespace

ModResult corollary_shift_rhs(const LucasParams& params, Index k, Index n) {
    const Integer uk = u_at(params, k);
    const auto m = term_modulus(uk);
    if (!m) return TrivialModulus{uk};
    return ResidueClass(shift_factor(params, k, n, *m), *m);
}

ModResult general_shift_rhs(const LucasParams& params, Index k, Index n, Index r) {
    const Integer uk = u_at(params, k);
    const auto m = term_modulus(uk);
    if (!m) return TrivialModulus{uk};
    return ResidueClass(u_at(params, r) * shift_factor(params, k, n, *m), *m);
}

std::optional<bool> repetition_law_check(const LucasParams& params, Index k, Index n, Index i) {
    require_positive(n, "n");
    require_positive(i, "i");
    const Integer n_pow = pow(Integer(n), i);
    if (!divides(n_pow, u_at(params, k))) return std::nullopt;
    return divides(n_pow * Integer(n), u_at(params, k * n));
}

MainTheoremResult main_theorem_rhs(const LucasParams& params, Index n, Index k) {
    const CaseTag tag = classify_case(n, k);
    const Integer un = u_at(params, n);
    const auto m = term_modulus(un);
    if (!m) return {TrivialModulus{un}, tag};

    const Index d = std::gcd(n, k);
    const Integer dd(d);
    const Integer quotient = divexact(un, u_at(params, d));
    const Integer kn_minus = Integer(k) * Integer(n) - Integer(k) - Integer(n);

    if (tag == CaseTag::BothEvenOddQuotients) {
        const auto q_part = signed_pow_mod(params.q(), half_exponent(kn_minus), *m);
        return {ResidueClass(dd * u_at(params, d + 1) * quotient * q_part.value(), *m), tag};
    }
    const auto q_part = signed_pow_mod(params.q(), half_exponent(kn_minus + dd), *m);
    return {ResidueClass(dd * quotient * q_part.value(), *m), tag};
}

ModResult fibonacci_rhs_family(Index k, Index n, FibFamily family) {
    const LucasParams fib = fibonacci_params();
    const Integer kk(k);
    const Integer nn(n);

    switch (family) {
        case FibFamily::NextTerm: {
            const Integer fk = u_at(fib, k);
            const auto m = term_modulus(fk);
            if (!m) return TrivialModulus{fk};
            if (is_odd(n)) {
                return ResidueClass(u_at(fib, k + 1) * Integer(minus_one_power(kk * (nn - 1))), *m);
            }
            return ResidueClass(minus_one_power(kk * nn), *m);
        }
        case FibFamily::RatioModK: {
            require_positive(k, "k");
            const Integer fk = u_at(fib, k);
            const auto m = term_modulus(fk);
            if (!m) return TrivialModulus{fk};
            if (n == 0) return ResidueClass(0, *m);
            if (is_odd(n)) return ResidueClass(nn * Integer(minus_one_power(kk * (nn - 1))), *m);
            return ResidueClass(nn * u_at(fib, k + 1) * Integer(minus_one_power(kk * (nn - 2))), *m);
        }
        case FibFamily::RatioModN: {
            const CaseTag tag = classify_case(n, k);
            const Integer fn = u_at(fib, n);
            const auto m = term_modulus(fn);
            if (!m) return TrivialModulus{fn};
            const Index d = std::gcd(n, k);
            const Integer dd(d);
            const Integer quotient = divexact(fn, u_at(fib, d));
            const Integer kn_minus = kk * nn - kk - nn;
            if (tag == CaseTag::BothEvenOddQuotients) {
                return ResidueClass(dd * quotient * u_at(fib, d + 1) * Integer(minus_one_power(kn_minus)), *m);
            }
            return ResidueClass(dd * quotient * Integer(minus_one_power(kn_minus + dd)), *m);
        }
    }
    fail(ErrorCode::InvalidArgument, "unknown Fibonacci family");
}

ResidueClass mersenne_ratio_rhs(Index n, Index k) {
    if (n < 2) fail(ErrorCode::InvalidArgument, "n must be >= 2");
    require_positive(k, "k");
    const Index d = std::gcd(n, k);
    const Integer modulus = Integer::mersenne(n);
    return ResidueClass(Integer(d) * divexact(modulus, Integer::mersenne(d)), modulus);
}

ModResult ratio_mod_k_oracle(const LucasParams& params, Index k, Index n) {
    const Integer uk = u_at(params, k);
    const auto m = term_modulus(uk);
    if (!m) return TrivialModulus{uk};
    return ResidueClass(divexact(u_at(params, k * n), uk), *m);
}

ModResult term_mod_oracle(const LucasParams& params, Index index, Index k) {
    const Integer uk = u_at(params, k);
    const auto m = term_modulus(uk);
    if (!m) return TrivialModulus{uk};
    return ResidueClass(u_at(params, index), *m);
}

ModResult ratio_mod_n_oracle(const LucasParams& params, Index n, Index k) {
    const Integer un = u_at(params, n);
    const auto m = term_modulus(un);
    if (!m) return TrivialModulus{un};
    return ResidueClass(divexact(u_at(params, k * n), u_at(params, k)), *m);
}

ResidueClass mersenne_ratio_oracle(Index n, Index k) {
    if (n < 2) fail(ErrorCode::InvalidArgument, "n must be >= 2");
    require_positive(k, "k");
    return ResidueClass(divexact(Integer::mersenne(k * n), Integer::mersenne(k)), Integer::mersenne(n));
}

namespace {

constexpr std::array<std::pair<Family, std::string_view>, 10> kFamilyNames{{
    {Family::Lemma1, "lemma1"},
    {Family::Lemma2, "lemma2"},
    {Family::Cor6, "cor6"},
    {Family::Cor7, "cor7"},
    {Family::Shift, "shift"},
    {Family::Main, "main"},
    {Family::Fib19, "fib19"},
    {Family::Fib20, "fib20"},
    {Family::Fib21, "fib21"},
    {Family::Mersenne22, "mersenne22"},
}};

}  // namespace

std::string_view to_string(Family family) {
    for (const auto& [f, name] : kFamilyNames) {
        if (f == family) return name;
    }
    return "unknown";
}

std::optional<Family> parse_family(std::string_view name) {
    for (const auto& [f, n] : kFamilyNames) {
        if (n == name) return f;
    }
    return std::nullopt;
}

CongruenceReport check_congruence(Family family, const LucasParams& params, Index k, Index n,
                                  std::optional<Index> r) {
    const LucasParams fib = fibonacci_params();
    const LucasParams* used = &params;
    if (family == Family::Fib19 || family == Family::Fib20 || family == Family::Fib21) used = &fib;

    auto report = [&](ModResult lhs, ModResult rhs, std::optional<CaseTag> tag = std::nullopt) {
        const bool holds = is_trivial(lhs) || is_trivial(rhs) || lhs == rhs;
        return CongruenceReport{family, used->p(), used->q(), k, n,
                                family == Family::Shift ? r : std::nullopt,
                                std::move(lhs), std::move(rhs), tag, holds};
    };

    switch (family) {
        case Family::Lemma1: return report(ratio_mod_k_oracle(params, k, n), lemma1_rhs(params, k, n));
        case Family::Lemma2: return report(term_mod_oracle(params, k * n + 1, k), lemma2_rhs(params, k, n));
        case Family::Cor6: return report(ratio_mod_k_oracle(params, k, n), corollary_ratio_rhs(params, k, n));
        case Family::Cor7: return report(term_mod_oracle(params, k * n + 1, k), corollary_shift_rhs(params, k, n));
        case Family::Shift: {
            if (!r) fail(ErrorCode::InvalidArgument, "the shift family needs r");
            return report(term_mod_oracle(params, k * n + *r, k), general_shift_rhs(params, k, n, *r));
        }
        case Family::Main: {
            require_positive(k, "k");
            // U_0 = 0: the modulus is vacuous.
            if (n == 0) return report(TrivialModulus{0}, TrivialModulus{0});
            auto rhs = main_theorem_rhs(params, n, k);
            return report(ratio_mod_n_oracle(params, n, k), std::move(rhs.residue), rhs.tag);
        }
        case Family::Fib19: return report(term_mod_oracle(fib, k * n + 1, k), fibonacci_rhs_family(k, n, FibFamily::NextTerm));
        case Family::Fib20: return report(ratio_mod_k_oracle(fib, k, n), fibonacci_rhs_family(k, n, FibFamily::RatioModK));
        case Family::Fib21: {
            require_positive(k, "k");
            require_positive(n, "n");
            return report(ratio_mod_n_oracle(fib, n, k), fibonacci_rhs_family(k, n, FibFamily::RatioModN),
                          classify_case(n, k));
        }
        case Family::Mersenne22: {
            const LucasParams mersenne = mersenne_params();
            used = &mersenne;
            return report(mersenne_ratio_oracle(n, k), mersenne_ratio_rhs(n, k), classify_case(n, k));
        }
    }
    fail(ErrorCode::InvalidArgument, "unknown family");
}

}  // namespace lucas
