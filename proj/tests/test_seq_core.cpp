#include <gtest/gtest.h>

#include <bit>
#include <numeric>
#include <vector>

#include "lucas/integer.hpp"
#include "lucas/seq_core.hpp"
#include "test_support.hpp"

namespace lucas {
namespace {

using testing::code_of;

std::vector<LucasParams> grid() {
    std::vector<LucasParams> out;
    for (int p = 1; p <= 5; ++p) {
        for (int q = -3; q <= 3; ++q) {
            if (std::gcd(p, q) == 1) out.push_back(make_params(p, q));
        }
    }
    return out;
}

TEST(MakeParamsTest, DiscriminantAndCoprimality) {
    EXPECT_EQ(make_params(1, -1).discriminant(), Integer(5));
    EXPECT_EQ(make_params(3, 2).discriminant(), Integer(1));
    EXPECT_EQ(make_params(2, 1).discriminant(), Integer(0));
    EXPECT_EQ(make_params(-1, 3).discriminant(), Integer(-11));
    EXPECT_EQ(code_of([] { (void)make_params(2, 4); }), ErrorCode::CoprimalityViolation);
    EXPECT_EQ(code_of([] { (void)make_params(-6, 9); }), ErrorCode::CoprimalityViolation);
    EXPECT_EQ(code_of([] { (void)make_params(0, 0); }), ErrorCode::ZeroPair);
    EXPECT_EQ(code_of([] { (void)make_params(0, 2); }), ErrorCode::CoprimalityViolation);
}

TEST(MakeParamsTest, GridSize) {
    // Per P: 7, 4, 4, 4, 6 admissible Q values.
    EXPECT_EQ(grid().size(), 25U);
}

TEST(UAtTest, Examples) {
    EXPECT_EQ(u_at(fibonacci_params(), 12), Integer(144));
    EXPECT_EQ(u_at(mersenne_params(), 5), Integer(31));
    EXPECT_EQ(u_at(make_params(2, -1), 4), Integer(12));
    for (const auto& params : grid()) EXPECT_EQ(u_at(params, 0), Integer(0));
}

TEST(UAtTest, MersenneClosedForm) {
    for (Index n = 0; n <= 130; ++n) EXPECT_EQ(u_at(mersenne_params(), n), Integer::mersenne(n)) << n;
}

TEST(VAtTest, Examples) {
    EXPECT_EQ(v_at(fibonacci_params(), 0), Integer(2));
    EXPECT_EQ(v_at(fibonacci_params(), 4), Integer(7));
    EXPECT_EQ(v_at(mersenne_params(), 3), Integer(9));
    for (Index n = 0; n <= 70; ++n) EXPECT_EQ(v_at(mersenne_params(), n), Integer::power_of_two(n) + 1);
}

TEST(UTermsTest, MatchesUAt) {
    const auto params = make_params(4, -3);
    const auto terms = u_terms(params, 40);
    ASSERT_EQ(terms.size(), 41U);
    for (Index n = 0; n <= 40; ++n) EXPECT_EQ(terms[n], u_at(params, n));
    EXPECT_EQ(u_terms(params, 0).size(), 1U);
}

TEST(UPairModTest, Examples) {
    auto [a, b] = u_pair_mod(fibonacci_params(), 10, 11);
    EXPECT_EQ(a, ResidueClass(0, 11));
    EXPECT_EQ(b, ResidueClass(1, 11));

    auto [c, d] = u_pair_mod(fibonacci_params(), 0, 7);
    EXPECT_EQ(c, ResidueClass(0, 7));
    EXPECT_EQ(d, ResidueClass(1, 7));

    auto [e, f] = u_pair_mod(mersenne_params(), 6, 63);
    EXPECT_EQ(e, ResidueClass(0, 63));
    EXPECT_EQ(f, ResidueClass(1, 63));
}

TEST(UPairModTest, BadModulus) {
    EXPECT_EQ(code_of([] { (void)u_pair_mod(fibonacci_params(), 5, 1); }), ErrorCode::BadModulus);
    EXPECT_EQ(code_of([] { (void)u_pair_mod(fibonacci_params(), 5, 0); }), ErrorCode::BadModulus);
    EXPECT_EQ(code_of([] { (void)u_pair_mod(fibonacci_params(), 5, -9); }), ErrorCode::BadModulus);
}

TEST(UPairModTest, AgreesWithRecurrenceOnGrid) {
    const std::vector<Integer> moduli{2, 3, 1000003, Integer::from_string("18446744073709551557")};
    for (const auto& params : grid()) {
        const auto terms = u_terms(params, 201);
        for (const auto& m : moduli) {
            for (Index n = 0; n <= 200; ++n) {
                const auto [u, u_next] = u_pair_mod(params, n, m);
                ASSERT_EQ(u, ResidueClass(terms[n], m)) << params.p() << "," << params.q() << " n=" << n << " m=" << m;
                ASSERT_EQ(u_next, ResidueClass(terms[n + 1], m));
            }
        }
    }
}

TEST(UPairModTest, NegativeAndHugeCoefficients) {
    const auto params = make_params(Integer::from_string("-123456789012345678901"), 7);
    const Integer m = Integer::mersenne(89);
    const auto terms = u_terms(params, 300);
    for (Index n : {0, 1, 2, 3, 17, 128, 255, 299}) EXPECT_EQ(u_pair_mod(params, n, m).first, ResidueClass(terms[n], m));
}

TEST(OperationCountTest, RecurrenceIsLinear) {
    const auto fib = fibonacci_params();
    for (Index n : {100, 1000, 4000}) {
        ArithProbe probe;
        (void)u_at(fib, n);
        EXPECT_LE(probe.stats().multiplications, 2 * n);
        EXPECT_GE(probe.stats().multiplications, n - 1);
    }
}

TEST(OperationCountTest, DoublingIsLogarithmic) {
    const Integer m = Integer::mersenne(127);
    const auto fib = fibonacci_params();
    for (Index n : {Index{1} << 10, Index{1} << 20, (Index{1} << 40) + 12345, ~Index{0}}) {
        ArithProbe probe;
        (void)u_pair_mod(fib, n, m);
        const auto bits = static_cast<std::uint64_t>(std::bit_width(n));
        EXPECT_LE(probe.stats().multiplications, 8 * bits) << n;
        EXPECT_LE(probe.stats().max_bits, 2 * 127U + 8);
    }
}

TEST(IdentityTest, AdditionExamples) {
    EXPECT_TRUE(check_addition_identity(fibonacci_params(), 7, 3));
    EXPECT_TRUE(check_addition_identity(fibonacci_params(), 5, 0));
    EXPECT_EQ(code_of([] { (void)check_addition_identity(fibonacci_params(), 3, 7); }), ErrorCode::InvalidArgument);
}

TEST(IdentityTest, VFromUExamples) {
    EXPECT_TRUE(check_v_from_u(fibonacci_params(), 6));
    EXPECT_TRUE(check_v_from_u(fibonacci_params(), 0));
}

TEST(IdentityTest, NormExamples) {
    EXPECT_TRUE(check_norm_identity(fibonacci_params(), 5));
    EXPECT_TRUE(check_norm_identity(fibonacci_params(), 0));
}

TEST(IdentityTest, StrongDivisibilityExamples) {
    EXPECT_TRUE(check_strong_divisibility(fibonacci_params(), 10, 15));
    EXPECT_TRUE(check_strong_divisibility(fibonacci_params(), 7, 7));
    EXPECT_EQ(code_of([] { (void)check_strong_divisibility(fibonacci_params(), 0, 3); }), ErrorCode::InvalidArgument);
}

TEST(IdentityTest, HoldOnGrid) {
    for (const auto& params : grid()) {
        for (Index m = 0; m <= 25; ++m) {
            for (Index n = 0; n <= m; ++n) ASSERT_TRUE(check_addition_identity(params, m, n));
            ASSERT_TRUE(check_v_from_u(params, m));
            ASSERT_TRUE(check_norm_identity(params, m));
        }
        for (Index x = 1; x <= 30; ++x) {
            for (Index y = 1; y <= 30; ++y) ASSERT_TRUE(check_strong_divisibility(params, x, y));
        }
    }
}

}  // namespace
}  // namespace lucas
