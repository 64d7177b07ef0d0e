#pragma once

#include <optional>
#include <string_view>

#include "lucas/integer.hpp"
#include "lucas/residue.hpp"
#include "lucas/seq_core.hpp"

// Closed-form residues of U_{kn}/U_k and U_{kn+r} modulo U_k, and of
// U_{kn}/U_k modulo U_n. Each has a brute-force counterpart that evaluates
// the left-hand side exactly by the recurrence and reduces it.
//
// Moduli taken from sequence terms use the absolute value of the term.
// When that value is 0 or 1 the result is TrivialModulus.

namespace lucas {

/// a(x): 0 for odd x, 1 for even x.
struct ParityIndicator {
    unsigned value;
};

ParityIndicator parity_indicator(Index x);

enum class CaseTag {
    OddN,                   // n odd
    EvenNOddK,              // n even, k odd
    BothEvenMixedQuotients, // n, k even; n/d and k/d of different parity
    BothEvenOddQuotients,   // n, k even; n/d and k/d both odd
};

std::string_view to_string(CaseTag tag);

/// Case split of the U_{kn}/U_k mod U_n congruence, d = gcd(n, k).
/// Throws InvalidArgument unless n, k >= 1.
CaseTag classify_case(Index n, Index k);

/// Q^e mod m with the sign of Q carried separately from |Q|^e mod m.
ResidueClass signed_pow_mod(const Integer& base, const Integer& exponent, const Integer& m);

/// Q^e computed exactly, then reduced. Reference for signed_pow_mod.
ResidueClass exact_pow_mod(const Integer& base, Index exponent, const Integer& m);

// Closed forms, modulo |U_k|.

/// U_{kn}/U_k: n Q^{k(n-1)/2} for odd n, n U_{k+1} Q^{k(n-2)/2} for even n.
ModResult lemma1_rhs(const LucasParams& params, Index k, Index n);

/// U_{kn+1}: U_{k+1} Q^{k(n-1)/2} for odd n, Q^{kn/2} for even n.
ModResult lemma2_rhs(const LucasParams& params, Index k, Index n);

/// U_{kn}/U_k as n (U_{k+1})^{a(n)} Q^{k(n-a(n)-1)/2}.
ModResult corollary_ratio_rhs(const LucasParams& params, Index k, Index n);

/// U_{kn+1} as (U_{k+1})^{1-a(n)} Q^{k(n+a(n)-1)/2}.
ModResult corollary_shift_rhs(const LucasParams& params, Index k, Index n);

/// U_{kn+r} as U_r (U_{k+1})^{1-a(n)} Q^{k(n+a(n)-1)/2}.
ModResult general_shift_rhs(const LucasParams& params, Index k, Index n, Index r);

/// If n^i | U_k, reports whether n^{i+1} | U_{kn}; nullopt when n^i does
/// not divide U_k.
std::optional<bool> repetition_law_check(const LucasParams& params, Index k, Index n, Index i);

struct MainTheoremResult {
    ModResult residue;
    CaseTag tag;
};

/// U_{kn}/U_k modulo |U_n|, d = gcd(n, k):
///   d U_{d+1} (U_n/U_d) Q^{(kn-k-n)/2}   when n, k even and n/d, k/d odd
///   d (U_n/U_d) Q^{(kn-k-n+d)/2}         otherwise
/// Throws InvalidArgument unless n, k >= 1.
MainTheoremResult main_theorem_rhs(const LucasParams& params, Index n, Index k);

enum class FibFamily { NextTerm, RatioModK, RatioModN };

/// Fibonacci specializations with the (-1)^e factors evaluated by parity.
/// NextTerm: F_{kn+1} mod F_k. RatioModK: F_{kn}/F_k mod F_k. RatioModN: F_{kn}/F_k mod F_n.
ModResult fibonacci_rhs_family(Index k, Index n, FibFamily family);

/// d (2^n-1)/(2^d-1) mod 2^n-1, d = gcd(n, k). Needs n >= 2, k >= 1.
ResidueClass mersenne_ratio_rhs(Index n, Index k);

// Brute-force left-hand sides.

/// (U_{kn}/U_k) mod |U_k|, exact division asserted.
ModResult ratio_mod_k_oracle(const LucasParams& params, Index k, Index n);
/// U_index mod |U_k|.
ModResult term_mod_oracle(const LucasParams& params, Index index, Index k);
/// (U_{kn}/U_k) mod |U_n|, exact division asserted.
ModResult ratio_mod_n_oracle(const LucasParams& params, Index n, Index k);
/// ((2^{kn}-1)/(2^k-1)) mod 2^n-1, exact division asserted.
ResidueClass mersenne_ratio_oracle(Index n, Index k);

enum class Family { Lemma1, Lemma2, Cor6, Cor7, Shift, Main, Fib19, Fib20, Fib21, Mersenne22 };

std::string_view to_string(Family family);
/// Parses the CLI family names (lemma1, cor6, fib21, mersenne22, ...).
std::optional<Family> parse_family(std::string_view name);

struct CongruenceReport {
    Family family;
    Integer p;
    Integer q;
    Index k = 0;
    Index n = 0;
    std::optional<Index> r;
    ModResult lhs;
    ModResult rhs;
    std::optional<CaseTag> case_tag;
    bool holds = false;
};

/// Evaluates both sides of one congruence instance. For the Fibonacci and
/// Mersenne families the params argument is ignored and (1,-1) or (3,2) is
/// used. r is required for Shift and ignored elsewhere.
CongruenceReport check_congruence(Family family, const LucasParams& params, Index k, Index n,
                                  std::optional<Index> r = std::nullopt);

}  // namespace lucas
