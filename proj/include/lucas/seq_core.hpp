#pragma once

#include <utility>
#include <vector>

#include "lucas/integer.hpp"
#include "lucas/residue.hpp"

namespace lucas {

/// Coefficients of the recurrence a(n+1) = P a(n) - Q a(n-1), with P and Q
/// coprime. Construct through make_params.
class LucasParams {
public:
    const Integer& p() const { return p_; }
    const Integer& q() const { return q_; }
    /// P^2 - 4Q
    const Integer& discriminant() const { return discriminant_; }

    friend bool operator==(const LucasParams&, const LucasParams&) = default;

private:
    friend LucasParams make_params(const Integer& p, const Integer& q);
    LucasParams(Integer p, Integer q, Integer discriminant)
        : p_(std::move(p)), q_(std::move(q)), discriminant_(std::move(discriminant)) {}

    Integer p_;
    Integer q_;
    Integer discriminant_;
};

/// Throws ZeroPair for (0, 0) and CoprimalityViolation when gcd(|p|, |q|) != 1.
LucasParams make_params(const Integer& p, const Integer& q);

/// U_n(1, -1)
LucasParams fibonacci_params();
/// U_n(3, 2) = 2^n - 1
LucasParams mersenne_params();

/// U_n by the recurrence, exact. O(n) big-integer operations.
Integer u_at(const LucasParams& params, Index n);

/// V_n by the recurrence, exact.
Integer v_at(const LucasParams& params, Index n);

/// U_0 .. U_last by the recurrence.
std::vector<Integer> u_terms(const LucasParams& params, Index last);

/// (U_n mod m, U_{n+1} mod m) by index doubling: O(log n) modular
/// multiplications. Throws BadModulus when m <= 1.
std::pair<ResidueClass, ResidueClass> u_pair_mod(const LucasParams& params, Index n, const Integer& m);

/// U_{m+n} = U_m V_n - Q^n U_{m-n}, checked exactly. Requires n <= m.
bool check_addition_identity(const LucasParams& params, Index m, Index n);

/// V_n = 2 U_{n+1} - P U_n, checked exactly.
bool check_v_from_u(const LucasParams& params, Index n);

/// V_n^2 - D U_n^2 = 4 Q^n, checked exactly.
bool check_norm_identity(const LucasParams& params, Index n);

/// gcd(|U_x|, |U_y|) = |U_gcd(x,y)| for x, y >= 1.
bool check_strong_divisibility(const LucasParams& params, Index x, Index y);

}  // namespace lucas
