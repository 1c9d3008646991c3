#include <random>

#include <gtest/gtest.h>

#include "homalg/scalars.hpp"

using namespace homalg;

namespace {

QLaurent random_laurent(std::mt19937& gen) {
    std::uniform_int_distribution<int> exp(-3, 3), num(-5, 5), den(1, 4), len(0, 4);
    QLaurent r;
    for (int i = len(gen); i > 0; --i) r += QLaurent::q_power(exp(gen), Rational(num(gen), den(gen)));
    return r;
}

}  // namespace

TEST(QLaurent, NoZeroCoefficientsStored) {
    QLaurent a = QLaurent::q() + 1;
    a -= QLaurent::q();
    EXPECT_TRUE(a.is_constant());
    EXPECT_EQ(a.terms().size(), 1u);
    EXPECT_TRUE((a - 1).is_zero());
}

TEST(QLaurent, InverseCancels) {
    EXPECT_EQ(QLaurent::q() * QLaurent::q_power(-1), QLaurent(1));
    EXPECT_EQ(QLaurent::q().pow(5), QLaurent::q_power(5));
    EXPECT_EQ((QLaurent::q() + 1).pow(2), QLaurent::q_power(2) + QLaurent::q_power(1, 2) + 1);
}

TEST(QLaurent, RingLaws) {
    std::mt19937 gen(20240611);
    for (int trial = 0; trial < 300; ++trial) {
        const QLaurent a = random_laurent(gen), b = random_laurent(gen), c = random_laurent(gen);
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a - a, QLaurent());
        EXPECT_EQ(a * 1, a);
    }
}

TEST(QLaurent, SpecializeIsRingMorphism) {
    std::mt19937 gen(7);
    for (const Rational& q0 : {Rational(1), Rational(-2), Rational(3, 5)})
        for (int trial = 0; trial < 100; ++trial) {
            const QLaurent a = random_laurent(gen), b = random_laurent(gen);
            EXPECT_EQ((a + b).specialize(q0), a.specialize(q0) + b.specialize(q0));
            EXPECT_EQ((a * b).specialize(q0), a.specialize(q0) * b.specialize(q0));
        }
}

TEST(QLaurent, SpecializeValues) {
    EXPECT_EQ(QLaurent::q_power(-2, 3).specialize(2), Rational(3, 4));
    EXPECT_EQ(QLaurent::q_power(9).specialize(1), Rational(1));
    EXPECT_THROW(QLaurent::q().specialize(0), InvalidSpecialization);
    EXPECT_THROW(QLaurent(5).specialize(0), InvalidSpecialization);
}

TEST(QLaurent, Render) {
    EXPECT_EQ(QLaurent().to_string(), "0");
    EXPECT_EQ(QLaurent::q_power(2).to_string(), "q^2");
    EXPECT_EQ(QLaurent::q().to_string(), "q");
    EXPECT_EQ((QLaurent::q_power(-1, 3) + QLaurent::q_power(2, Rational(1, 2))).to_string(), "3*q^-1 + 1/2*q^2");
    EXPECT_EQ((QLaurent(1) - QLaurent::q()).to_string(), "1 - q");
}

TEST(QLaurent, ParseRenderRoundTrip) {
    std::mt19937 gen(99);
    for (int trial = 0; trial < 200; ++trial) {
        const QLaurent a = random_laurent(gen);
        EXPECT_EQ(parse_qlaurent(a.to_string()), a) << a.to_string();
    }
}

TEST(QLaurent, ParseForms) {
    EXPECT_EQ(parse_qlaurent("(q+1)^2"), QLaurent::q_power(2) + QLaurent::q_power(1, 2) + 1);
    EXPECT_EQ(parse_qlaurent("2q^-3"), QLaurent::q_power(-3, 2));
    EXPECT_EQ(parse_rational("-3/4"), Rational(-3, 4));
    EXPECT_THROW(parse_rational("q"), ParseError);
    EXPECT_THROW(parse_qlaurent("x"), std::invalid_argument);
    EXPECT_THROW(parse_qlaurent("1/0"), std::exception);
    EXPECT_THROW(parse_qlaurent("(q"), ParseError);
}

TEST(QLaurent, ConstantValue) {
    EXPECT_EQ(QLaurent(Rational(2, 3)).constant_value(), Rational(2, 3));
    EXPECT_THROW(QLaurent::q().constant_value(), std::domain_error);
}
