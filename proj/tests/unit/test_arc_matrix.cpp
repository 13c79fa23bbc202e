#include <gtest/gtest.h>

#include "arcstab/arc_matrix.hpp"
#include "arcstab/errors.hpp"
#include "arcstab/snf.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace arcstab;

namespace {

ArcMatrix A(std::vector<std::vector<const char*>> rows)
{
    std::vector<std::vector<LaurentSeries>> m;
    for (const auto& r : rows) {
        m.emplace_back();
        for (const char* e : r) {
            m.back().push_back(parse_series(e));
        }
    }
    return ArcMatrix(std::move(m));
}

ArcMatrix cochar(std::vector<std::int64_t> w)
{
    return from_cocharacter(w);
}

} // namespace

TEST(ArcMatrix, ConstructionChecks)
{
    EXPECT_THROW(A({{"1", "z"}, {"1"}}), DimensionMismatch);
    EXPECT_THROW(A({{"1", "z"}, {"1", "z"}}), SingularMatrix);
    EXPECT_NO_THROW(A({{"1", "z^-1"}, {"0", "1"}}));
}

TEST(ArcCompose, Examples)
{
    EXPECT_EQ(compose(cochar({1, -1}), cochar({-1, 1})), ArcMatrix::identity(2));
    const auto M = A({{"1", "z^-1 + 3"}, {"z", "2"}});
    EXPECT_EQ(compose(M, ArcMatrix::identity(2)), M);
    const auto u = A({{"1", "z^-1"}, {"0", "1"}});
    EXPECT_EQ(compose(u, u), A({{"1", "2*z^-1"}, {"0", "1"}}));
    EXPECT_THROW(compose(u, ArcMatrix::identity(3)), DimensionMismatch);
}

TEST(ArcInverse, Examples)
{
    EXPECT_EQ(inverse(A({{"z^2", "0"}, {"0", "z^-1"}})), A({{"z^-2", "0"}, {"0", "z"}}));
    EXPECT_EQ(inverse(A({{"1", "z^-1"}, {"0", "1"}})), A({{"1", "-z^-1"}, {"0", "1"}}));
    EXPECT_EQ(inverse(ArcMatrix::identity(3)), ArcMatrix::identity(3));
}

TEST(ArcInverse, SingularToKnownPrecision)
{
    std::vector<std::vector<LaurentSeries>> rows = {{LaurentSeries::big_o(3), LaurentSeries::big_o(3)},
                                                    {LaurentSeries::big_o(3), LaurentSeries::big_o(3)}};
    const auto m = ArcMatrix::unchecked(2, {rows[0][0], rows[0][1], rows[1][0], rows[1][1]});
    EXPECT_THROW(inverse(m), SingularMatrix);
}

TEST(ArcInverse, MatchesAdjugateOnRandomArcs)
{
    gen::Random rng(101);
    for (int t = 0; t < 40; ++t) {
        const auto m = static_cast<std::size_t>(rng.uniform(1, 4));
        const auto a = rng.arc(m);
        const auto inv = inverse(a);
        EXPECT_TRUE(inv.agrees_with(oracle::adjugate_inverse(a)));
        EXPECT_TRUE(compose(a, inv).agrees_with(ArcMatrix::identity(m)));
        EXPECT_TRUE(inverse(inv).agrees_with(a));
    }
}

TEST(ArcDeterminant, MatchesLeibniz)
{
    gen::Random rng(5);
    for (int t = 0; t < 60; ++t) {
        const auto m = static_cast<std::size_t>(rng.uniform(1, 5));
        const auto a = rng.arc(m);
        EXPECT_TRUE(determinant(a).agrees_with(oracle::leibniz_det(a)));
    }
}

TEST(FromCocharacter, Examples)
{
    EXPECT_EQ(cochar({0, 0, 0}), ArcMatrix::identity(3));
    EXPECT_EQ(cochar({1, -1}), A({{"z", "0"}, {"0", "z^-1"}}));
    EXPECT_EQ(cochar({2, 2}), ArcMatrix::scalar(2, 2));
}

TEST(MinEntryOrd, Examples)
{
    EXPECT_EQ(min_entry_ord(A({{"1", "z^-1"}, {"0", "1"}})), -1);
    EXPECT_EQ(min_entry_ord(ArcMatrix::identity(2)), 0);
    EXPECT_EQ(min_entry_ord(ArcMatrix::scalar(3, 3)), 3);
}

TEST(Equivalence, Examples)
{
    const auto M = A({{"1", "z^-1 + 3"}, {"z", "2"}});
    EXPECT_TRUE(is_equivalent(M, M));
    EXPECT_TRUE(is_equivalent(ArcMatrix::identity(2), A({{"1", "z"}, {"0", "1"}})));
    EXPECT_FALSE(is_equivalent(ArcMatrix::identity(2), A({{"z", "0"}, {"0", "1"}})));
}

TEST(Equivalence, ConventionsDiffer)
{
    // b * a^-1 = identity, a * b = diag(z^2, z^-2).
    const auto a = cochar({1, -1});
    EXPECT_TRUE(is_equivalent(a, a, EquivalenceConvention::left_quotient));
    EXPECT_FALSE(is_equivalent(a, a, EquivalenceConvention::literal_product));
}

TEST(Equivalence, IsAnEquivalenceRelation)
{
    gen::Random rng(77);
    for (int t = 0; t < 30; ++t) {
        const auto a = rng.arc(2, -1, 1);
        const auto b = compose(rng.integral_unit(2), a);
        const auto c = compose(rng.integral_unit(2), b);
        const auto d = rng.arc(2, -1, 1);
        EXPECT_TRUE(is_equivalent(a, a));
        EXPECT_TRUE(is_equivalent(a, b));
        EXPECT_TRUE(is_equivalent(b, a));
        EXPECT_TRUE(is_equivalent(a, c));
        EXPECT_EQ(is_equivalent(a, d), is_equivalent(d, a));
        if (is_equivalent(a, d)) {
            EXPECT_TRUE(is_equivalent(b, d));
        }
    }
}

TEST(IntegralUnit, GeneratedUnitsAreUnits)
{
    gen::Random rng(9);
    for (int t = 0; t < 30; ++t) {
        EXPECT_TRUE(is_integral_unit(rng.integral_unit(static_cast<std::size_t>(rng.uniform(1, 4)))));
    }
    EXPECT_FALSE(is_integral_unit(cochar({1, 0})));
}

TEST(Snf, Examples)
{
    EXPECT_EQ(snf(A({{"z^2", "0"}, {"0", "z^-1"}})).exponents, (std::vector<std::int64_t>{-1, 2}));
    const auto u = A({{"1", "z^-1"}, {"0", "1"}});
    EXPECT_EQ(snf(u).exponents, (std::vector<std::int64_t>{-1, 1}));
    EXPECT_EQ(oracle::divisor_exponents(u), (std::vector<std::int64_t>{-1, 1}));
    const auto id = snf(ArcMatrix::identity(3));
    EXPECT_EQ(id.exponents, (std::vector<std::int64_t>{0, 0, 0}));
}

TEST(Snf, RandomArcsAgainstDeterminantalDivisors)
{
    gen::Random rng(2024);
    for (int t = 0; t < 100; ++t) {
        const auto m = static_cast<std::size_t>(rng.uniform(1, 5));
        const auto a = rng.arc(m);
        const auto d = snf(a);
        EXPECT_TRUE(reconstruct(d).agrees_with(a));
        EXPECT_TRUE(std::is_sorted(d.exponents.begin(), d.exponents.end()));
        EXPECT_TRUE(is_integral_unit(d.U));
        EXPECT_TRUE(is_integral_unit(d.Uprime));
        std::int64_t sum = 0;
        for (auto e : d.exponents) {
            sum += e;
        }
        EXPECT_EQ(sum, oracle::leibniz_det(a).ord().value());
        if (m <= 3) {
            EXPECT_EQ(d.exponents, oracle::divisor_exponents(a));
        }
    }
}

TEST(Snf, PlaceholderBelowPivotIsReported)
{
    const auto m = ArcMatrix::unchecked(2, {parse_series("z"), LaurentSeries::big_o(-1), parse_series("0"),
                                            parse_series("1")});
    EXPECT_THROW(snf(m), PrecisionExhausted);
}
