#include "vanish/elimination.hpp"
#include "vanish/linalg.hpp"
#include "vanish/poly.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

using namespace vanish;

namespace {

using UP = UPoly<Rat>;
using BP = BPoly<Rat>;

UP up(std::initializer_list<long> c) {
    std::vector<Rat> v;
    for (auto x : c) v.emplace_back(x);
    return UP(v);
}

// Π (t - r_i)
UP from_roots(const std::vector<long>& roots) {
    UP p = UP::constant(Rat(1));
    for (auto r : roots) p = p * up({-r, 1});
    return p;
}

BP bp(std::initializer_list<std::tuple<int, int, long>> terms) {
    BP f;
    for (auto [i, j, a] : terms) f.add_term(static_cast<std::size_t>(i), static_cast<std::size_t>(j), Rat(a));
    f.trim();
    return f;
}

// Sylvester determinant of two integer polynomials.
Int sylvester(const std::vector<long>& a, const std::vector<long>& b) {
    const std::size_t m = a.size() - 1, n = b.size() - 1, N = m + n;
    IntMatrix S(N, IntVec(N, Int(0)));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t i = 0; i <= m; ++i) S[r][r + i] = a[m - i];
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t i = 0; i <= n; ++i) S[n + r][r + i] = b[n - i];
    return determinant(S);
}

}  // namespace

TEST(UPoly, ArithmeticAndEvaluation) {
    auto p = up({1, 2, 1});
    EXPECT_EQ(p.degree(), 2);
    EXPECT_EQ(p(Rat(-1)), Rat(0));
    EXPECT_EQ(p * up({1, -1}), up({1, 1, -1, -1}));
    EXPECT_EQ(p - p, UP());
    auto [q, r] = divmod(p, up({1, 1}));
    EXPECT_EQ(q, up({1, 1}));
    EXPECT_TRUE(r.is_zero());
}

TEST(UPoly, GcdAndSquarefree) {
    auto a = from_roots({1, 1, 2, 3});
    auto b = from_roots({1, 3, 5});
    EXPECT_EQ(gcd(a, b), from_roots({1, 3}));
    EXPECT_EQ(squarefree_part(a), from_roots({1, 2, 3}));
    EXPECT_EQ(distinct_roots(a), 3);
    EXPECT_EQ(distinct_roots(up({1, 0, 1})), 2);
}

TEST(UPoly, ResultantMatchesSylvesterDeterminant) {
    std::mt19937 rng(11);
    std::uniform_int_distribution<long> coef(-6, 6), deg(1, 4);
    for (int t = 0; t < 200; ++t) {
        std::vector<long> a(static_cast<std::size_t>(deg(rng)) + 1), b(static_cast<std::size_t>(deg(rng)) + 1);
        for (auto& x : a) x = coef(rng);
        for (auto& x : b) x = coef(rng);
        if (a.back() == 0) a.back() = 1;
        if (b.back() == 0) b.back() = -2;
        std::vector<Rat> ar(a.begin(), a.end()), br(b.begin(), b.end());
        EXPECT_EQ(resultant(UP(ar), UP(br)), Rat(sylvester(a, b)));
    }
}

TEST(UPoly, InterpolationRecoversPolynomial) {
    auto p = up({3, -1, 0, 2, 5});
    std::vector<Rat> xs, ys;
    for (long t = -2; t <= 2; ++t) {
        xs.emplace_back(t);
        ys.push_back(p(Rat(t)));
    }
    EXPECT_EQ(interpolate(xs, ys), p);
}

TEST(UPoly, RationalRoots) {
    auto p = up({-6, 1, 1}) * up({1, 0, 1}) * UP(std::vector<Rat>{Rat(-1), Rat(3)});
    auto r = rational_roots(p);
    ASSERT_TRUE(r.has_value());
    EXPECT_EQ(*r, (std::vector<Rat>{Rat(-3), Rat(1, 3), Rat(2)}));
}

TEST(BPoly, ShearAndTranslate) {
    auto F = bp({{1, 0, 1}, {0, 1, 1}, {0, 0, -2}});  // x + y - 2
    auto s = F.sheared(Rat(5), Rat(2));                // 5 - 2y + y - 2
    EXPECT_EQ(s, up({3, -1}));
    auto G = bp({{2, 0, 1}, {0, 1, -1}});  // x^2 - y
    auto T = G.translated(Rat(1), Rat(1));  // (x+1)^2 - (y+1)
    EXPECT_EQ(T, bp({{2, 0, 1}, {1, 0, 2}, {0, 1, -1}}));
    EXPECT_EQ(G.theta(0), bp({{2, 0, 2}}));
    EXPECT_EQ(G.partial(1), bp({{0, 0, -1}}));
}

TEST(Elimination, UnivariateTorusZeros) {
    EXPECT_EQ(torus_zeros(std::vector<UP>{from_roots({0, 0, 1, 2, 2})}), (ZeroCount{true, 2}));
    EXPECT_EQ(torus_zeros(std::vector<UP>{from_roots({1, 2}), from_roots({2, 3})}), (ZeroCount{true, 1}));
    EXPECT_EQ(torus_zeros(std::vector<UP>{UP()}), (ZeroCount{false, 0}));
}

TEST(Elimination, PlaneSystemsWithKnownRoots) {
    std::mt19937_64 rng(3);
    // x + y - 2 = x - y = 0: the point (1, 1)
    auto F = bp({{1, 0, 1}, {0, 1, 1}, {0, 0, -2}});
    auto G = bp({{1, 0, 1}, {0, 1, -1}});
    EXPECT_EQ(torus_zeros(std::vector<BP>{F, G}, rng), (ZeroCount{true, 1}));
    // x^2 - y = 0, y - 4 = 0: (±2, 4)
    auto H = bp({{2, 0, 1}, {0, 1, -1}});
    auto L = bp({{0, 1, 1}, {0, 0, -4}});
    auto pts = torus_points(std::vector<BP>{H, L}, rng);
    EXPECT_EQ(pts.total, (ZeroCount{true, 2}));
    ASSERT_EQ(pts.rational.size(), 2U);
    EXPECT_EQ(pts.rational[0], std::make_pair(Rat(-2), Rat(4)));
    // common factor: infinitely many zeros
    EXPECT_FALSE(torus_zeros(std::vector<BP>{F, F * G}, rng).finite);
    // zeros on the axes are dropped: x*y - x = x(y - 1), x - 1 ... only (1,1)
    auto A = bp({{1, 1, 1}, {1, 0, -1}});
    auto B = bp({{1, 0, 1}, {0, 0, -1}});
    EXPECT_EQ(torus_zeros(std::vector<BP>{A, B}, rng), (ZeroCount{true, 1}));
    // x = 0 and y = 0 only meet off the torus
    auto X = bp({{1, 0, 1}, {0, 1, 1}});
    auto Y = bp({{1, 0, 1}, {0, 1, 2}});
    EXPECT_EQ(torus_zeros(std::vector<BP>{X, Y}, rng), (ZeroCount{true, 0}));
}

TEST(Elimination, ProductSystemsCountDistinctRoots) {
    // (x - a_i) and (y - b_j) products: the grid of torus points
    std::mt19937 pick(5);
    std::uniform_int_distribution<long> val(-4, 4);
    std::mt19937_64 rng(9);
    for (int t = 0; t < 30; ++t) {
        std::set<long> as, bs;
        BP F = bp({{0, 0, 1}}), G = bp({{0, 0, 1}});
        for (int i = 0; i < 2; ++i) {
            long a = val(pick), b = val(pick);
            as.insert(a);
            bs.insert(b);
            F = F * bp({{1, 0, 1}, {0, 0, -a}});
            G = G * bp({{0, 1, 1}, {0, 0, -b}});
        }
        std::size_t expect = (as.size() - as.count(0)) * (bs.size() - bs.count(0));
        EXPECT_EQ(torus_zeros(std::vector<BP>{F, G}, rng), (ZeroCount{true, expect}));
    }
}

TEST(Elimination, ThreeEquations) {
    std::mt19937_64 rng(1);
    auto F = bp({{1, 0, 1}, {0, 1, 1}, {0, 0, -2}});
    auto G = bp({{1, 0, 1}, {0, 1, -1}});
    auto H = bp({{2, 0, 1}, {0, 1, -1}});  // x^2 = y holds at (1,1)
    EXPECT_EQ(torus_zeros(std::vector<BP>{F, G, H}, rng), (ZeroCount{true, 1}));
    auto K = bp({{2, 0, 1}, {0, 1, -2}});
    EXPECT_EQ(torus_zeros(std::vector<BP>{F, G, K}, rng), (ZeroCount{true, 0}));
}

TEST(Multiplicity, FultonExamples) {
    auto x = bp({{1, 0, 1}});
    auto y = bp({{0, 1, 1}});
    EXPECT_EQ(intersection_multiplicity(x, y), 1U);
    EXPECT_EQ(intersection_multiplicity(bp({{0, 1, 1}, {2, 0, -1}}), y), 2U);
    EXPECT_EQ(intersection_multiplicity(bp({{0, 2, 1}, {3, 0, -1}}), y), 3U);
    EXPECT_EQ(intersection_multiplicity(bp({{0, 2, 1}, {3, 0, -1}}), bp({{0, 2, 1}, {3, 0, 1}})), 6U);
    EXPECT_EQ(intersection_multiplicity(x, x * y), std::nullopt);
    EXPECT_EQ(intersection_multiplicity(bp({{1, 0, 1}, {0, 0, 1}}), y), 0U);
}

TEST(Multiplicity, BrieskornMilnorNumbers) {
    // x^a + y^b at the origin has μ = (a - 1)(b - 1)
    for (int a = 2; a <= 5; ++a)
        for (int b = 2; b <= 5; ++b) {
            auto f = bp({{a, 0, 1}, {0, b, 1}});
            EXPECT_EQ(milnor_number(f, Rat(0), Rat(0)), static_cast<std::size_t>((a - 1) * (b - 1)));
        }
}

TEST(Multiplicity, NodeAndCuspAwayFromOrigin) {
    // (x-1)^2 - (y-1)^2 and (x-1)^2 - (y-1)^3, moved to (1,1)
    auto node = bp({{2, 0, 1}, {0, 2, -1}}).translated(Rat(-1), Rat(-1));
    auto cusp = bp({{2, 0, 1}, {0, 3, -1}}).translated(Rat(-1), Rat(-1));
    EXPECT_EQ(milnor_number(node, Rat(1), Rat(1)), 1U);
    EXPECT_EQ(milnor_number(cusp, Rat(1), Rat(1)), 2U);
    EXPECT_THROW(milnor_number(node, Rat(2), Rat(1)), NotSingularError);
    auto line2 = bp({{1, 0, 1}, {0, 0, -1}});
    EXPECT_THROW(milnor_number(line2 * line2, Rat(1), Rat(3)), NonIsolatedError);
    EXPECT_EQ(milnor_number(from_roots({2, 2, 2, 5}), Rat(2)), 2U);
}
