#include <gtest/gtest.h>

#include "arcstab/exact_lp.hpp"
#include "generators.hpp"

using namespace arcstab;

namespace {

Rational R(long p, long q = 1)
{
    Rational r{mpz_class(p), mpz_class(q)};
    r.canonicalize();
    return r;
}

} // namespace

TEST(ExactLp, SmallOptimum)
{
    // min -x - y  s.t. x + 2y <= 4, 3x + y <= 6, x, y >= 0  ->  (8/5, 6/5)
    LinearProgram lp(2);
    lp.objective = {R(-1), R(-1)};
    lp.nonnegative = {true, true};
    lp.add_le({R(1), R(2)}, R(4));
    lp.add_le({R(3), R(1)}, R(6));
    const auto r = solve(lp);
    ASSERT_EQ(r.status, LpStatus::optimal);
    EXPECT_EQ(r.value, R(-14, 5));
    EXPECT_EQ(r.x, (std::vector<Rational>{R(8, 5), R(6, 5)}));
}

TEST(ExactLp, FreeVariablesAndEqualities)
{
    // min x  s.t. x - y = -3, -2 <= y <= 1, both free  ->  (-5, -2)
    LinearProgram lp(2);
    lp.objective = {R(1), R(0)};
    lp.add_eq({R(1), R(-1)}, R(-3));
    lp.add_le({R(0), R(1)}, R(1));
    lp.add_le({R(0), R(-1)}, R(2)); // y >= -2
    const auto r = solve(lp);
    ASSERT_EQ(r.status, LpStatus::optimal);
    EXPECT_EQ(r.value, R(-5));
    EXPECT_EQ(r.x, (std::vector<Rational>{R(-5), R(-2)}));
}

TEST(ExactLp, Infeasible)
{
    LinearProgram lp(1);
    lp.objective = {R(1)};
    lp.add_le({R(1)}, R(-1));
    lp.add_le({R(-1)}, R(-1));
    EXPECT_EQ(solve(lp).status, LpStatus::infeasible);
}

TEST(ExactLp, UnboundedWithRay)
{
    LinearProgram lp(2);
    lp.objective = {R(1), R(-1)};
    lp.add_le({R(1), R(-1)}, R(2));
    const auto r = solve(lp);
    ASSERT_EQ(r.status, LpStatus::unbounded);
    ASSERT_EQ(r.ray.size(), 2u);
    // Improving and feasible direction.
    EXPECT_LT(r.ray[0] - r.ray[1], 0);
    EXPECT_LE(r.ray[0] - r.ray[1], 0) << "ray must stay feasible";
}

TEST(ExactLp, DegenerateCyclingExampleTerminates)
{
    LinearProgram lp(4);
    lp.objective = {R(-3, 4), R(20), R(-1, 2), R(6)};
    lp.nonnegative = {true, true, true, true};
    lp.add_le({R(1, 4), R(-8), R(-1), R(9)}, R(0));
    lp.add_le({R(1, 2), R(-12), R(-1, 2), R(3)}, R(0));
    lp.add_le({R(0), R(0), R(1), R(0)}, R(1));
    const auto r = solve(lp);
    ASSERT_EQ(r.status, LpStatus::optimal);
    EXPECT_EQ(r.value, R(-5, 4));
}

TEST(ExactLp, RandomBoxedProgramsMatchVertexEnumeration)
{
    // min c.x over the box [-b, b]^2 cut by one random halfplane through the
    // origin; the optimum is at one of the finitely many vertices.
    gen::Random rng(5);
    for (int t = 0; t < 50; ++t) {
        const long b = rng.uniform(1, 4);
        const Rational c0 = R(rng.uniform(-5, 5));
        const Rational c1 = R(rng.uniform(-5, 5));
        const Rational a0 = R(rng.uniform(-3, 3));
        const Rational a1 = R(rng.uniform(1, 3));
        LinearProgram lp(2);
        lp.objective = {c0, c1};
        lp.add_le({R(1), R(0)}, R(b));
        lp.add_le({R(-1), R(0)}, R(b));
        lp.add_le({R(0), R(1)}, R(b));
        lp.add_le({R(0), R(-1)}, R(b));
        lp.add_le({a0, a1}, R(0));
        const auto r = solve(lp);
        ASSERT_EQ(r.status, LpStatus::optimal);
        // Brute force over the vertices of the cut box.
        std::vector<std::vector<Rational>> cand;
        for (long sx : {-b, b}) {
            for (long sy : {-b, b}) {
                cand.push_back({R(sx), R(sy)});
            }
            cand.push_back({R(sx), -a0 * R(sx) / a1});
            if (a0 != 0) {
                cand.push_back({-a1 * R(sx) / a0, R(sx)});
            }
        }
        std::optional<Rational> best;
        for (const auto& p : cand) {
            if (abs(p[0]) > b || abs(p[1]) > b || a0 * p[0] + a1 * p[1] > 0) {
                continue;
            }
            const Rational v = c0 * p[0] + c1 * p[1];
            if (!best || v < *best) {
                best = v;
            }
        }
        ASSERT_TRUE(best.has_value());
        EXPECT_EQ(r.value, *best);
    }
}
