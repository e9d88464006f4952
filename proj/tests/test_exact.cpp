#include "vanish/exact.hpp"
#include "vanish/linalg.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace vanish;

TEST(Exact, PrimitiveVector) {
    EXPECT_EQ(primitive_vector(make_vec({2, 4, 6})), make_vec({1, 2, 3}));
    EXPECT_EQ(primitive_vector(make_vec({-3, 6})), make_vec({-1, 2}));
    EXPECT_THROW(primitive_vector(make_vec({0, 0})), ZeroVectorError);
}

TEST(Exact, PrimitiveVectorIdempotentAndScaleInvariant) {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> coord(-30, 30), lam(1, 9);
    for (int t = 0; t < 500; ++t) {
        IntVec v = make_vec({coord(rng), coord(rng), coord(rng)});
        if (is_zero(v)) continue;
        auto p = primitive_vector(v);
        EXPECT_EQ(primitive_vector(p), p);
        EXPECT_EQ(primitive_vector(scale(v, Int(lam(rng)))), p);
        EXPECT_TRUE(is_primitive(p));
    }
}

TEST(Exact, GaussIntegrality) {
    EXPECT_TRUE(is_integer(GaussRat(Rat(3))));
    EXPECT_FALSE(is_integer(GaussRat(Rat(1, 2))));
    EXPECT_FALSE(is_integer(GaussRat(Rat(2), Rat(1, 3))));
}

TEST(Exact, RationalCrossMultiplication) {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> num(-1000, 1000), den(1, 1000);
    for (int t = 0; t < 500; ++t) {
        long a = num(rng), b = den(rng), c = num(rng), d = den(rng);
        Rat s = Rat(a, b) + Rat(c, d);
        EXPECT_EQ(s * Rat(b * d), Rat(a * d + c * b));
        EXPECT_GT(denom(s), 0);
        EXPECT_EQ(gcd(abs(numer(s)), denom(s)) == 1 || numer(s) == 0, true);
    }
}

TEST(Exact, ParseAndPrint) {
    EXPECT_EQ(parse_rat("-6/4"), Rat(-3, 2));
    EXPECT_EQ(to_string(Rat(-3, 2)), "-3/2");
    EXPECT_EQ(to_string(Rat(5)), "5");
    EXPECT_THROW(parse_rat("1/0"), InputError);
    EXPECT_THROW(parse_rat("x"), InputError);
    EXPECT_THROW(parse_rat("1/"), InputError);
}

TEST(Exact, GaussArithmetic) {
    GaussRat i(Rat(0), Rat(1));
    EXPECT_EQ(i * i, GaussRat(-1));
    GaussRat z(Rat(1, 2), Rat(3));
    EXPECT_EQ((z / z), GaussRat(1));
    EXPECT_THROW(z / GaussRat(0), std::domain_error);
}

TEST(Linalg, DeterminantAndRank) {
    IntMatrix m{make_vec({2, 0, 1}), make_vec({1, 3, 2}), make_vec({1, 1, 1})};
    EXPECT_EQ(determinant(m), 2 * (3 - 2) - 0 + 1 * (1 - 3));
    EXPECT_EQ(rank({make_vec({1, 2}), make_vec({2, 4})}), 1u);
    IntMatrix z{make_vec({0, 1, 0}), make_vec({0, 0, 0}), make_vec({1, 0, 0})};
    EXPECT_EQ(determinant(z), 0);
}

TEST(Linalg, IntegerKernelIsSaturated) {
    // x + 2y + 3z = 0
    auto K = integer_kernel({make_vec({1, 2, 3})}, 3);
    ASSERT_EQ(K.size(), 2u);
    for (const auto& v : K) EXPECT_EQ(dot(v, make_vec({1, 2, 3})), 0);
    // (2,4,6) direction saturates to (1,2,3)
    auto B = saturated_basis({make_vec({2, 4, 6})}, 3);
    ASSERT_EQ(B.size(), 1u);
    EXPECT_EQ(primitive_vector(B[0]) == make_vec({1, 2, 3}) ||
                  primitive_vector(B[0]) == make_vec({-1, -2, -3}),
              true);
    EXPECT_TRUE(is_primitive(B[0]));
}

TEST(Linalg, SaturatedBasisHasUnitIndex) {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> coord(-6, 6);
    for (int t = 0; t < 100; ++t) {
        IntMatrix vs{make_vec({coord(rng), coord(rng), coord(rng), coord(rng)}),
                     make_vec({coord(rng), coord(rng), coord(rng), coord(rng)})};
        if (rank(vs) != 2) continue;
        auto B = saturated_basis(vs, 4);
        ASSERT_EQ(B.size(), 2u);
        for (const auto& v : vs) ASSERT_TRUE(coordinates(B, v).has_value());
        // saturated: the 2x2 minors of B have gcd 1
        Int g = 0;
        for (int a = 0; a < 4; ++a)
            for (int b = a + 1; b < 4; ++b)
                g = gcd(g, abs(B[0][a] * B[1][b] - B[0][b] * B[1][a]));
        EXPECT_EQ(g, 1);
    }
}
