#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lucas/integer.hpp"
#include "lucas/residue.hpp"
#include "lucas/seq_core.hpp"

namespace lucas {

std::uint64_t euler_phi(std::uint64_t n);

/// Divisors d of n with 1 <= d < n, ascending. Needs n >= 2.
std::vector<std::uint64_t> proper_divisors(std::uint64_t n);

/// (a/p) by Euler's criterion. Throws NotOddPrime unless p is an odd prime.
int legendre_symbol(const Integer& a, std::uint64_t p);

/// Deterministic for every 64-bit n: trial division below 2^20, otherwise
/// strong probable-prime tests to the first twelve prime bases.
bool is_prime_oracle(std::uint64_t n);
/// Throws OutOfRange for n >= 2^64 and InvalidArgument for n < 0.
bool is_prime_oracle(const Integer& n);

enum class SumPath { Direct, Fast };

/// sum_{k=1}^{n-1} (2^{kn}-1)/(2^k-1) mod 2^n-1, every term an exact quotient.
ResidueClass mersenne_sum_residue_direct(Index n);

/// The same sum grouped by d = gcd(n, k): sum over proper divisors d of
/// phi(n/d) * (d (2^n-1)/(2^d-1) mod 2^n-1). No operand exceeds ~2n bits.
ResidueClass mersenne_sum_residue_fast(Index n);

struct PrimalityVerdict {
    Index n = 0;
    std::string method;
    ResidueClass sum_residue;
    bool criterion_says_prime = false;
    bool oracle_says_prime = false;
    bool agree = false;
    std::chrono::nanoseconds elapsed{0};
};

PrimalityVerdict mersenne_primality_test(Index n, SumPath path);

struct DivisorSumTerm {
    std::uint64_t divisor;
    std::uint64_t phi;         // phi(n / divisor)
    Rational contribution;     // divisor * phi / (2^divisor - 1)
};

struct DivisorSumBreakdown {
    Index n = 0;
    std::vector<DivisorSumTerm> terms;
    Rational total;
    bool is_integer = false;
};

/// sum over proper divisors d of n of d phi(n/d) / (2^d - 1), exactly.
DivisorSumBreakdown divisor_sum_breakdown(Index n);

/// sum_{k=1}^{n-1} F_{kn}/F_k mod F_n. Each F_{kn} is reduced modulo
/// F_k F_n by index doubling and divided exactly by F_k. Needs n >= 3.
ResidueClass fibonacci_sum_residue_direct(Index n);

/// The same sum with every F_{kn} built in full. Secondary reference for
/// small n; cost grows with n^2 digits.
ResidueClass fibonacci_sum_residue_exact(Index n);

/// sum over proper divisors d of phi(n/d) d (F_n/F_d) (-1)^{(d-n)/2} mod F_n.
/// Throws WrongResidueClass unless n = 1 (mod 4), n >= 5.
ResidueClass fibonacci_sum_residue_fast(Index n);

/// Throws Unsupported unless n = 1 (mod 4), n >= 5 and n is not 9 or 25.
PrimalityVerdict fibonacci_primality_test(Index n, SumPath path);

/// For n = 3 (mod 4): whether the Fibonacci sum vanishes mod F_n.
/// Throws WrongResidueClass otherwise.
bool remark_check(Index n);

inline constexpr std::uint64_t kDefaultTrialCap = std::uint64_t{1} << 20;

/// Smallest prime dividing U_n and no U_m with 1 <= m < n, or nullopt.
/// Factors |U_n| by trial division up to trial_cap; a cofactor that cannot
/// be certified prime within the cap raises CapExceeded. Throws
/// UnsupportedDiscriminant when D <= 0.
std::optional<Integer> primitive_prime_divisor(const LucasParams& params, Index n,
                                               std::uint64_t trial_cap = kDefaultTrialCap);

/// Least n >= 1 with p | F_n, checked to divide p - (5/p).
/// Throws Unsupported for p in {2, 5} and NotOddPrime for composite p.
Index rank_of_apparition_fib(std::uint64_t p);

}  // namespace lucas
