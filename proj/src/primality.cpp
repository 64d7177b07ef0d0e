#include "lucas/primality.hpp"

#include <algorithm>
#include <array>

#include "lucas/congruence.hpp"
#include "lucas/errors.hpp"

namespace lucas {

namespace {

using Clock = std::chrono::steady_clock;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
    std::uint64_t result = 1 % m;
    base %= m;
    while (e > 0) {
        if (e & 1U) result = mulmod(result, base, m);
        base = mulmod(base, base, m);
        e >>= 1U;
    }
    return result;
}

bool strong_probable_prime(std::uint64_t n, std::uint64_t base) {
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1U) == 0) {
        d >>= 1U;
        ++s;
    }
    std::uint64_t x = powmod(base, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 1; i < s; ++i) {
        x = mulmod(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

constexpr std::uint64_t kTrialDivisionLimit = std::uint64_t{1} << 20;

std::string n_text(Index n) { return "n = " + std::to_string(n); }

}  // namespace

std::uint64_t euler_phi(std::uint64_t n) {
    if (n == 0) fail(ErrorCode::InvalidArgument, "phi needs n >= 1");
    std::uint64_t result = n;
    for (std::uint64_t p = 2; p <= n / p; ++p) {
        if (n % p != 0) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

std::vector<std::uint64_t> proper_divisors(std::uint64_t n) {
    if (n < 2) fail(ErrorCode::InvalidArgument, "proper divisors need n >= 2");
    std::vector<std::uint64_t> divisors;
    for (std::uint64_t d = 1; d <= n / d; ++d) {
        if (n % d != 0) continue;
        divisors.push_back(d);
        if (d != n / d) divisors.push_back(n / d);
    }
    std::sort(divisors.begin(), divisors.end());
    divisors.pop_back();  // n itself
    return divisors;
}

bool is_prime_oracle(std::uint64_t n) {
    if (n < 2) return false;
    if (n < kTrialDivisionLimit) {
        for (std::uint64_t p = 2; p <= n / p; ++p) {
            if (n % p == 0) return false;
        }
        return true;
    }
    // These bases are a deterministic witness set for all n < 3.3e24.
    constexpr std::array<std::uint64_t, 12> kBases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (auto b : kBases) {
        if (n % b == 0) return n == b;
    }
    return std::all_of(kBases.begin(), kBases.end(), [n](std::uint64_t b) { return strong_probable_prime(n, b); });
}

bool is_prime_oracle(const Integer& n) {
    if (n.sign() < 0) fail(ErrorCode::InvalidArgument, "primality oracle needs n >= 0");
    if (!n.fits_u64()) fail(ErrorCode::OutOfRange, n.to_string() + " is not below 2^64");
    return is_prime_oracle(n.to_u64());
}

int legendre_symbol(const Integer& a, std::uint64_t p) {
    if (p % 2 == 0 || !is_prime_oracle(p)) {
        fail(ErrorCode::NotOddPrime, std::to_string(p) + " is not an odd prime");
    }
    const Integer modulus(p);
    const Integer e = powm(floor_mod(a, modulus), Integer((p - 1) / 2), modulus);
    if (e.is_zero()) return 0;
    return e == Integer(1) ? 1 : -1;
}

ResidueClass mersenne_sum_residue_direct(Index n) {
    if (n < 2) fail(ErrorCode::InvalidArgument, "Mersenne sum needs n >= 2");
    const Integer modulus = Integer::mersenne(n);
    Integer sum = 0;
    for (Index k = 1; k < n; ++k) {
        const Integer term = divexact(Integer::mersenne(k * n), Integer::mersenne(k));
        sum = floor_mod(sum + floor_mod(term, modulus), modulus);
    }
    return ResidueClass(sum, modulus);
}

ResidueClass mersenne_sum_residue_fast(Index n) {
    if (n < 2) fail(ErrorCode::InvalidArgument, "Mersenne sum needs n >= 2");
    const Integer modulus = Integer::mersenne(n);
    Integer sum = 0;
    for (auto d : proper_divisors(n)) {
        // Every k < n with gcd(n, k) = d contributes the same residue.
        const ResidueClass term = mersenne_ratio_rhs(n, d);
        sum = floor_mod(sum + Integer(euler_phi(n / d)) * term.value(), modulus);
    }
    return ResidueClass(sum, modulus);
}

PrimalityVerdict mersenne_primality_test(Index n, SumPath path) {
    const auto start = Clock::now();
    ResidueClass residue = path == SumPath::Direct ? mersenne_sum_residue_direct(n) : mersenne_sum_residue_fast(n);
    const auto elapsed = Clock::now() - start;
    const bool criterion = residue.is_zero();
    const bool oracle = is_prime_oracle(static_cast<std::uint64_t>(n));
    return PrimalityVerdict{n,
                            path == SumPath::Direct ? "mersenne-sum-direct" : "mersenne-sum",
                            std::move(residue),
                            criterion,
                            oracle,
                            criterion == oracle,
                            std::chrono::duration_cast<std::chrono::nanoseconds>(elapsed)};
}

DivisorSumBreakdown divisor_sum_breakdown(Index n) {
    if (n < 2) fail(ErrorCode::InvalidArgument, "divisor sum needs n >= 2");
    DivisorSumBreakdown out;
    out.n = n;
    for (auto d : proper_divisors(n)) {
        const std::uint64_t phi = euler_phi(n / d);
        Rational contribution(Integer(d) * Integer(phi), Integer::mersenne(d));
        out.total += contribution;
        out.terms.push_back(DivisorSumTerm{d, phi, std::move(contribution)});
    }
    out.is_integer = out.total.is_integer();
    return out;
}

ResidueClass fibonacci_sum_residue_direct(Index n) {
    if (n < 3) fail(ErrorCode::InvalidArgument, "Fibonacci sum needs n >= 3");
    const LucasParams fib = fibonacci_params();
    const std::vector<Integer> f = u_terms(fib, n);
    const Integer& fn = f[n];

    Integer sum = 0;
    for (Index k = 1; k < n; ++k) {
        const Integer& fk = f[k];
        const Integer residue = u_pair_mod(fib, k * n, fk * fn).first.value();
        if (!divides(fk, residue)) {
            fail(ErrorCode::InternalInvariantViolation,
                 "F_" + std::to_string(k * n) + " mod F_k F_n is not divisible by F_" + std::to_string(k));
        }
        sum = floor_mod(sum + divexact(residue, fk), fn);
    }
    return ResidueClass(sum, fn);
}

ResidueClass fibonacci_sum_residue_exact(Index n) {
    if (n < 3) fail(ErrorCode::InvalidArgument, "Fibonacci sum needs n >= 3");
    const std::vector<Integer> f = u_terms(fibonacci_params(), n * (n - 1));
    Integer sum = 0;
    for (Index k = 1; k < n; ++k) sum += divexact(f[k * n], f[k]);
    return ResidueClass(sum, f[n]);
}

ResidueClass fibonacci_sum_residue_fast(Index n) {
    if (n < 5 || n % 4 != 1) {
        fail(ErrorCode::WrongResidueClass, "fast Fibonacci sum needs n = 1 (mod 4), n >= 5; got " + n_text(n));
    }
    const LucasParams fib = fibonacci_params();
    const std::vector<Integer> f = u_terms(fib, n);
    const Integer& fn = f[n];

    Integer sum = 0;
    for (auto d : proper_divisors(n)) {
        // n and d are odd, so (n - d)/2 is an integer and its parity fixes the sign.
        const Index half = (n - d) / 2;
        Integer term = Integer(euler_phi(n / d)) * Integer(d) * divexact(fn, f[d]);
        if (half % 2 == 1) term = -term;
        sum = floor_mod(sum + term, fn);
    }
    return ResidueClass(sum, fn);
}

PrimalityVerdict fibonacci_primality_test(Index n, SumPath path) {
    if (n < 5 || n % 4 != 1 || n == 9 || n == 25) {
        fail(ErrorCode::Unsupported, "Fibonacci criterion needs n = 1 (mod 4), n >= 5, n not in {9, 25}; got " + n_text(n));
    }
    const auto start = Clock::now();
    ResidueClass residue = path == SumPath::Direct ? fibonacci_sum_residue_direct(n) : fibonacci_sum_residue_fast(n);
    const auto elapsed = Clock::now() - start;
    const bool criterion = residue.is_zero();
    const bool oracle = is_prime_oracle(static_cast<std::uint64_t>(n));
    return PrimalityVerdict{n,
                            path == SumPath::Direct ? "fib-sum-direct" : "fib-sum",
                            std::move(residue),
                            criterion,
                            oracle,
                            criterion == oracle,
                            std::chrono::duration_cast<std::chrono::nanoseconds>(elapsed)};
}

bool remark_check(Index n) {
    if (n < 3 || n % 4 != 3) fail(ErrorCode::WrongResidueClass, "remark needs n = 3 (mod 4); got " + n_text(n));
    return fibonacci_sum_residue_direct(n).is_zero();
}

std::optional<Integer> primitive_prime_divisor(const LucasParams& params, Index n, std::uint64_t trial_cap) {
    if (params.discriminant().sign() <= 0) {
        fail(ErrorCode::UnsupportedDiscriminant, "primitive divisors need P^2 - 4Q > 0");
    }
    if (n == 0) fail(ErrorCode::InvalidArgument, "primitive divisors need n >= 1");

    const std::vector<Integer> terms = u_terms(params, n);
    Integer rest = terms[n].abs();

    std::vector<Integer> primes;
    std::uint64_t p = 2;
    for (; p <= trial_cap && Integer(p) * Integer(p) <= rest; ++p) {
        const Integer candidate(p);
        if (!divides(candidate, rest)) continue;
        primes.push_back(candidate);
        while (divides(candidate, rest)) rest = divexact(rest, candidate);
    }
    if (rest > Integer(1)) {
        if (Integer(p) * Integer(p) <= rest) {
            fail(ErrorCode::CapExceeded, "cofactor " + rest.to_string() + " of U_" + std::to_string(n) +
                                             " has no factor below the trial cap " + std::to_string(trial_cap));
        }
        primes.push_back(rest);
    }

    for (const Integer& prime : primes) {
        const bool earlier = std::any_of(terms.begin() + 1, terms.begin() + static_cast<std::ptrdiff_t>(n),
                                         [&](const Integer& u) { return divides(prime, u); });
        if (!earlier) return prime;
    }
    return std::nullopt;
}

Index rank_of_apparition_fib(std::uint64_t p) {
    if (p == 2 || p == 5) fail(ErrorCode::Unsupported, "rank of apparition is defined here for p != 2, 5");
    if (p % 2 == 0 || !is_prime_oracle(p)) fail(ErrorCode::NotOddPrime, std::to_string(p) + " is not an odd prime");

    std::uint64_t a = 0;
    std::uint64_t b = 1;
    Index rank = 0;
    do {
        const std::uint64_t next = (a + b) % p;
        a = b;
        b = next;
        ++rank;
    } while (a != 0);

    const std::int64_t target = static_cast<std::int64_t>(p) - legendre_symbol(5, p);
    if (target % static_cast<std::int64_t>(rank) != 0) {
        fail(ErrorCode::InternalInvariantViolation,
             "rank " + std::to_string(rank) + " does not divide " + std::to_string(target));
    }
    return rank;
}

}  // namespace lucas
