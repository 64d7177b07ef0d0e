#include "lucas/seq_core.hpp"

#include <bit>
#include <numeric>

#include "lucas/errors.hpp"

namespace lucas {

LucasParams make_params(const Integer& p, const Integer& q) {
    if (p.is_zero() && q.is_zero()) fail(ErrorCode::ZeroPair, "P = Q = 0");
    if (gcd(p, q) != Integer(1)) {
        fail(ErrorCode::CoprimalityViolation,
             "gcd(" + p.to_string() + ", " + q.to_string() + ") != 1");
    }
    return LucasParams(p, q, p * p - Integer(4) * q);
}

LucasParams fibonacci_params() { return make_params(1, -1); }
LucasParams mersenne_params() { return make_params(3, 2); }

namespace {

Integer run_recurrence(const LucasParams& params, Integer a0, Integer a1, Index n) {
    if (n == 0) return a0;
    for (Index i = 1; i < n; ++i) {
        Integer next = params.p() * a1 - params.q() * a0;
        a0 = std::move(a1);
        a1 = std::move(next);
    }
    return a1;
}

}  // namespace

Integer u_at(const LucasParams& params, Index n) { return run_recurrence(params, 0, 1, n); }

Integer v_at(const LucasParams& params, Index n) { return run_recurrence(params, 2, params.p(), n); }

std::vector<Integer> u_terms(const LucasParams& params, Index last) {
    std::vector<Integer> terms;
    terms.reserve(last + 1);
    terms.emplace_back(0);
    if (last >= 1) terms.emplace_back(1);
    for (Index i = 2; i <= last; ++i) {
        terms.push_back(params.p() * terms[i - 1] - params.q() * terms[i - 2]);
    }
    return terms;
}

std::pair<ResidueClass, ResidueClass> u_pair_mod(const LucasParams& params, Index n, const Integer& m) {
    if (m <= Integer(1)) fail(ErrorCode::BadModulus, "modulus must exceed 1, got " + m.to_string());

    const Integer p = floor_mod(params.p(), m);
    const Integer q = floor_mod(params.q(), m);

    // State (U_j, U_{j+1}, Q^j) mod m, starting at j = 0. Doubling uses
    //   V_j      = 2 U_{j+1} - P U_j
    //   U_{2j}   = U_j V_j
    //   U_{2j+1} = U_{j+1} V_j - Q^j
    Integer u = 0;
    Integer u_next = floor_mod(1, m);
    Integer q_pow = floor_mod(1, m);

    for (int bit = std::bit_width(n) - 1; bit >= 0; --bit) {
        Integer v = floor_mod(Integer(2) * u_next - p * u, m);
        Integer u_even = floor_mod(u * v, m);
        Integer u_odd = floor_mod(u_next * v - q_pow, m);
        q_pow = floor_mod(q_pow * q_pow, m);
        if ((n >> bit) & 1U) {
            u = std::move(u_odd);
            u_next = floor_mod(p * u - q * u_even, m);
            q_pow = floor_mod(q_pow * q, m);
        } else {
            u = std::move(u_even);
            u_next = std::move(u_odd);
        }
    }
    return {ResidueClass(u, m), ResidueClass(u_next, m)};
}

bool check_addition_identity(const LucasParams& params, Index m, Index n) {
    if (n > m) fail(ErrorCode::InvalidArgument, "addition identity needs n <= m");
    return u_at(params, m + n) == u_at(params, m) * v_at(params, n) - pow(params.q(), n) * u_at(params, m - n);
}

bool check_v_from_u(const LucasParams& params, Index n) {
    return v_at(params, n) == Integer(2) * u_at(params, n + 1) - params.p() * u_at(params, n);
}

bool check_norm_identity(const LucasParams& params, Index n) {
    const Integer u = u_at(params, n);
    const Integer v = v_at(params, n);
    return v * v - params.discriminant() * u * u == Integer(4) * pow(params.q(), n);
}

bool check_strong_divisibility(const LucasParams& params, Index x, Index y) {
    if (x == 0 || y == 0) fail(ErrorCode::InvalidArgument, "strong divisibility needs x, y >= 1");
    return gcd(u_at(params, x), u_at(params, y)) == u_at(params, std::gcd(x, y)).abs();
}

}  // namespace lucas
