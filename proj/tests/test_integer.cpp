#include <gtest/gtest.h>

#include "lucas/errors.hpp"
#include "lucas/integer.hpp"
#include "lucas/residue.hpp"
#include "test_support.hpp"

namespace lucas {
namespace {

using testing::code_of;

TEST(IntegerTest, ParsesSignedDecimal) {
    EXPECT_EQ(Integer::from_string("-17"), Integer(-17));
    EXPECT_EQ(Integer::from_string("+5"), Integer(5));
    EXPECT_EQ(Integer::from_string("340282366920938463463374607431768211456"), Integer::power_of_two(128));
    EXPECT_EQ(code_of([] { (void)Integer::from_string(""); }), ErrorCode::InvalidArgument);
    EXPECT_EQ(code_of([] { (void)Integer::from_string("-"); }), ErrorCode::InvalidArgument);
    EXPECT_EQ(code_of([] { (void)Integer::from_string("12x"); }), ErrorCode::InvalidArgument);
    EXPECT_EQ(code_of([] { (void)Integer::from_string("0x10"); }), ErrorCode::InvalidArgument);
}

TEST(IntegerTest, MersenneAndPowersOfTwo) {
    EXPECT_EQ(Integer::mersenne(12), Integer(4095));
    EXPECT_EQ(Integer::power_of_two(10), Integer(1024));
    EXPECT_EQ(Integer::mersenne(64).to_string(), "18446744073709551615");
    EXPECT_EQ(Integer::mersenne(64).bit_length(), 64U);
    EXPECT_EQ(Integer(0).bit_length(), 0U);
}

TEST(IntegerTest, ExactDivisionRejectsRemainders) {
    EXPECT_EQ(divexact(Integer(-144), Integer(12)), Integer(-12));
    EXPECT_EQ(code_of([] { (void)divexact(10, 3); }), ErrorCode::InexactDivision);
    EXPECT_EQ(code_of([] { (void)divexact(10, 0); }), ErrorCode::InternalInvariantViolation);
}

TEST(IntegerTest, FloorModIsNonnegative) {
    EXPECT_EQ(floor_mod(-8, 5), Integer(2));
    EXPECT_EQ(floor_mod(-8, -5), Integer(2));
    EXPECT_EQ(floor_mod(10, 5), Integer(0));
    EXPECT_EQ(code_of([] { (void)floor_mod(3, 0); }), ErrorCode::BadModulus);
}

TEST(IntegerTest, U64Conversions) {
    EXPECT_TRUE(Integer::mersenne(64).fits_u64());
    EXPECT_FALSE(Integer::power_of_two(64).fits_u64());
    EXPECT_FALSE(Integer(-1).fits_u64());
    EXPECT_EQ(code_of([] { (void)Integer::power_of_two(64).to_u64(); }), ErrorCode::OutOfRange);
    EXPECT_EQ(Integer(-42).to_i64(), -42);
}

TEST(IntegerTest, PowAndPowm) {
    EXPECT_EQ(pow(Integer(-3), 5), Integer(-243));
    EXPECT_EQ(pow(Integer(7), 0), Integer(1));
    EXPECT_EQ(powm(2, 10, 1000), Integer(24));
    EXPECT_EQ(code_of([] { (void)powm(2, 3, 1); }), ErrorCode::BadModulus);
    EXPECT_EQ(code_of([] { (void)powm(2, -1, 7); }), ErrorCode::InternalInvariantViolation);
}

TEST(ResidueClassTest, NormalizesAndRejectsSmallModuli) {
    const ResidueClass r(-8, 5);
    EXPECT_EQ(r.value(), Integer(2));
    EXPECT_EQ(r.modulus(), Integer(5));
    EXPECT_EQ(ResidueClass(7, 5), ResidueClass(2, 5));
    EXPECT_NE(ResidueClass(2, 5), ResidueClass(2, 7));
    EXPECT_EQ(code_of([] { ResidueClass(3, 1); }), ErrorCode::BadModulus);
    EXPECT_EQ(code_of([] { ResidueClass(3, 0); }), ErrorCode::BadModulus);
    EXPECT_EQ(code_of([] { ResidueClass(3, -7); }), ErrorCode::BadModulus);
}

TEST(RationalTest, LowestTerms) {
    Rational a(Integer(2), Integer(1));
    a += Rational(Integer(2), Integer(3));
    EXPECT_EQ(a.to_string(), "8/3");
    EXPECT_FALSE(a.is_integer());
    EXPECT_TRUE(Rational(Integer(6), Integer(3)).is_integer());
    EXPECT_EQ(Rational(Integer(6), Integer(-4)).to_string(), "-3/2");
    EXPECT_EQ(Rational(Integer(6), Integer(-4)).denominator(), Integer(2));
}

TEST(ArithProbeTest, CountsAndNests) {
    ArithProbe outer;
    Integer a = Integer(3) * Integer(4);
    {
        ArithProbe inner;
        const Integer b = a * a + Integer::power_of_two(100);
        EXPECT_GT(b, a);
        EXPECT_EQ(inner.stats().multiplications, 1U);
        EXPECT_EQ(inner.stats().additions, 1U);
        EXPECT_GE(inner.stats().max_bits, 101U);
    }
    // Inner counts fold back into the enclosing probe.
    EXPECT_EQ(outer.stats().multiplications, 2U);
    EXPECT_GE(outer.stats().max_bits, 101U);
}

}  // namespace
}  // namespace lucas
