#include <gtest/gtest.h>

#include "arcstab/action.hpp"
#include "arcstab/errors.hpp"
#include "arcstab/rep_vector.hpp"
#include "arcstab/weights.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace arcstab;

namespace {

const RepExpr std2 = RepExpr::std_rep(2);
const RepExpr sym22 = RepExpr::sym(2, RepExpr::std_rep(2));

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

std::vector<LaurentSeries> dense(const RepVector& v)
{
    std::vector<LaurentSeries> out;
    for (const auto& c : v.dense()) {
        out.push_back(c.is_zero() ? LaurentSeries::zero() : LaurentSeries::constant(c));
    }
    return out;
}

std::vector<LaurentSeries> series(std::vector<const char*> items)
{
    std::vector<LaurentSeries> out;
    for (const char* s : items) {
        out.push_back(parse_series(s));
    }
    return out;
}

std::vector<Rational> pt(std::vector<long> xs)
{
    std::vector<Rational> out;
    for (long x : xs) {
        out.emplace_back(x);
    }
    return out;
}

} // namespace

TEST(RepDim, Examples)
{
    EXPECT_EQ(sym22.dim(), 3u);
    EXPECT_THROW(RepExpr::tensor(RepExpr::std_rep(2), RepExpr::std_rep(3)), DimensionMismatch);
    EXPECT_EQ(RepExpr::direct_sum(RepExpr::sym(3, std2), RepExpr::sym(1, std2)).dim(), 6u);
    EXPECT_EQ(RepExpr::mat(3).dim(), 9u);
    EXPECT_EQ(RepExpr::sym(3, RepExpr::std_rep(4)).dim(), 20u);
    EXPECT_THROW(RepExpr::sym(40, RepExpr::std_rep(40)).dim(), DimensionOverflow);
}

TEST(RepBasis, CanonicalNamesAndOrder)
{
    EXPECT_EQ(sym22.basis_names(), (std::vector<std::string>{"e1^2", "e1*e2", "e2^2"}));
    EXPECT_EQ(RepExpr::mat(2).basis_names(), (std::vector<std::string>{"E1_1", "E1_2", "E2_1", "E2_2"}));
    EXPECT_EQ(RepExpr::triv().basis_names(), (std::vector<std::string>{"1"}));
    EXPECT_EQ(RepExpr::tensor(std2, std2).basis_names(), (std::vector<std::string>{"e1|e1", "e1|e2", "e2|e1", "e2|e2"}));
    EXPECT_EQ(RepExpr::direct_sum(std2, RepExpr::triv()).basis_names(),
              (std::vector<std::string>{"L:e1", "L:e2", "R:1"}));
    EXPECT_EQ(sym22.basis_index("e1*e2"), 1u);
    EXPECT_EQ(sym22.basis_index("#2"), 2u);
    EXPECT_THROW(sym22.basis_index("e3"), InvalidArgument);
    const auto names = RepExpr::sym(3, RepExpr::std_rep(3)).basis_names();
    EXPECT_EQ(names.front(), "e1^3");
    EXPECT_EQ(names[1], "e1^2*e2");
    EXPECT_EQ(names.back(), "e3^3");
}

TEST(RepBasis, SymOrderMatchesIndependentEnumeration)
{
    for (std::size_t n = 1; n <= 4; ++n) {
        for (std::size_t k = 1; k <= 4; ++k) {
            const auto mine = oracle::monomials(n, k);
            const auto lib = sym_exponents(n, k);
            ASSERT_EQ(mine.size(), lib.size());
            for (std::size_t i = 0; i < mine.size(); ++i) {
                EXPECT_EQ(std::vector<std::uint32_t>(mine[i].begin(), mine[i].end()), lib[i]);
                EXPECT_EQ(sym_index(lib[i]), i);
            }
        }
    }
}

TEST(RepGrammar, RoundTrip)
{
    for (const char* text : {"std(3)", "triv", "mat(2)", "sym(2,std(2))", "dual(std(2))",
                             "std(2) (x) std(2)", "sym(4,std(2)) (+) sym(2,std(2))",
                             "(std(2) (+) triv) (x) dual(sym(2,std(2)))"}) {
        const RepExpr r = parse_rep(text);
        EXPECT_EQ(parse_rep(r.to_string()), r) << text;
    }
    EXPECT_THROW(parse_rep("sym(2,"), ParseError);
    EXPECT_THROW(parse_rep("std(2) (x) std(3)"), ParseError);
    try {
        parse_rep("std(2) (y) std(2)");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.column(), 8u);
    }
}

TEST(RepVector, NamedConstruction)
{
    const auto v = RepVector::from_named(sym22, {{"e1^2", "1"}, {"e2^2", "-1/2"}, {"e1^2", "1"}});
    EXPECT_EQ(v.coords().at(0), GaussianRational(2));
    EXPECT_EQ(v.coords().at(2), GaussianRational(Rational(-1, 2)));
    EXPECT_EQ(v.named(), (std::vector<std::pair<std::string, std::string>>{{"e1^2", "2/1"}, {"e2^2", "-1/2"}}));
    EXPECT_THROW(RepVector(sym22, {{3, GaussianRational(1)}}), DimensionMismatch);
}

TEST(Act, Examples)
{
    const auto e2sq = RepVector::basis(sym22, 2);
    EXPECT_EQ(act(A({{"z", "0"}, {"0", "z^-1"}}), e2sq), series({"0", "0", "z^-2"}));
    const auto v = RepVector::from_named(sym22, {{"e1^2", "3"}, {"e1*e2", "i"}});
    EXPECT_EQ(act(ArcMatrix::identity(2), v), dense(v));
    EXPECT_EQ(act(A({{"1", "z^-1"}, {"0", "1"}}), e2sq), series({"z^-2", "2*z^-1", "1"}));
    EXPECT_THROW(act(ArcMatrix::identity(3), e2sq), DimensionMismatch);
}

TEST(Act, MatrixRepIsLeftMultiplication)
{
    const auto g = A({{"1", "z^-1"}, {"2", "z"}});
    EXPECT_EQ(act(g, identity_element(2)), series({"1", "z^-1", "2", "z"}));
}

TEST(Act, DualIsInverseTranspose)
{
    const auto g = A({{"1", "z^-1"}, {"0", "1"}});
    const auto e1 = RepVector::basis(RepExpr::dual(std2), 0);
    // (g^-1)^T = [[1, 0], [-z^-1, 1]]
    EXPECT_EQ(act(g, e1), series({"1", "-z^-1"}));
}

TEST(Act, MatchesOracleOnRandomReps)
{
    gen::Random rng(42);
    for (int t = 0; t < 80; ++t) {
        const auto m = static_cast<std::size_t>(rng.uniform(1, 3));
        const auto rep = rng.rep(m, 20);
        const auto g = rng.arc(m, -1, 1);
        const auto v = rng.vector(rep);
        const auto lib = act(g, v);
        const auto ref = oracle::apply(g, rep, dense(v));
        ASSERT_EQ(lib.size(), ref.size()) << rep.to_string();
        for (std::size_t i = 0; i < lib.size(); ++i) {
            EXPECT_TRUE(lib[i].agrees_with(ref[i])) << rep.to_string() << " coordinate " << i;
        }
    }
}

TEST(Act, HomomorphismAndLinearity)
{
    gen::Random rng(43);
    for (int t = 0; t < 40; ++t) {
        const auto m = static_cast<std::size_t>(rng.uniform(1, 3));
        const auto rep = rng.rep(m, 12);
        const auto g = rng.arc(m, -1, 1);
        const auto h = rng.arc(m, -1, 1);
        const auto v = rng.vector(rep);
        const auto w = rng.vector(rep);
        const auto gh = act(compose(g, h), v);
        const auto g_h = act(g, rep, act(h, v));
        for (std::size_t i = 0; i < gh.size(); ++i) {
            EXPECT_TRUE(gh[i].agrees_with(g_h[i]));
        }
        auto sum = dense(v);
        const auto wd = dense(w);
        for (std::size_t i = 0; i < sum.size(); ++i) {
            sum[i] += wd[i];
        }
        const auto lhs = act(g, rep, sum);
        const auto av = act(g, v);
        const auto aw = act(g, w);
        for (std::size_t i = 0; i < lhs.size(); ++i) {
            EXPECT_TRUE(lhs[i].agrees_with(av[i] + aw[i]));
        }
    }
}

TEST(Act, FloatingPointAgreesWithExact)
{
    gen::Random rng(44);
    for (int t = 0; t < 20; ++t) {
        const auto rep = rng.rep(2, 12);
        const auto v = rng.vector(rep);
        const auto g = rng.integral_unit(2, true);
        Eigen::MatrixXcd gd(2, 2);
        for (int i = 0; i < 2; ++i) {
            for (int j = 0; j < 2; ++j) {
                gd(i, j) = g(static_cast<std::size_t>(i), static_cast<std::size_t>(j)).eval(0.05);
            }
        }
        const auto exact = act(g, v);
        const auto approx = act(gd, v);
        for (std::size_t i = 0; i < exact.size(); ++i) {
            const auto e = exact[i].is_exact_zero() ? std::complex<double>() : exact[i].eval(0.05);
            EXPECT_NEAR(std::abs(e - approx[i]), 0.0, 1e-9 * (1.0 + std::abs(e)));
        }
    }
}

TEST(WeightTable, Examples)
{
    const auto t = weight_table(sym22, TorusData::diagonal(2));
    EXPECT_EQ(t.basis_weights, (std::vector<WeightVector>{{2, 0}, {1, 1}, {0, 2}}));
    EXPECT_EQ(weight_table(RepExpr::triv(), TorusData::diagonal(2)).basis_weights, (std::vector<WeightVector>{{0, 0}}));
    EXPECT_EQ(weight_table(RepExpr::dual(std2), TorusData::diagonal(2)).basis_weights,
              (std::vector<WeightVector>{{-1, 0}, {0, -1}}));
}

TEST(WeightTable, GroupsPartitionTheBasisAndMatchOracle)
{
    gen::Random rng(45);
    for (int t = 0; t < 60; ++t) {
        const auto m = static_cast<std::size_t>(rng.uniform(1, 4));
        const auto rep = rng.rep(m, 20);
        const auto table = weight_table(rep, TorusData::diagonal(m));
        EXPECT_EQ(table.basis_weights, oracle::diagonal_weights(rep, m)) << rep.to_string();
        std::vector<int> seen(rep.dim(), 0);
        for (const auto& [w, idx] : table.groups) {
            for (auto i : idx) {
                ++seen[i];
                EXPECT_EQ(table.basis_weights[i], w);
            }
        }
        for (int s : seen) {
            EXPECT_EQ(s, 1);
        }
    }
}

TEST(WeightTable, CocharacterActsByTheWeight)
{
    gen::Random rng(46);
    for (int t = 0; t < 40; ++t) {
        const auto m = static_cast<std::size_t>(rng.uniform(1, 3));
        const auto rep = rng.rep(m, 20);
        std::vector<std::int64_t> lambda(m);
        for (auto& x : lambda) {
            x = rng.uniform(-3, 3);
        }
        const auto weights = oracle::diagonal_weights(rep, m);
        const auto b = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(rep.dim()) - 1));
        const auto img = act(from_cocharacter(lambda), RepVector::basis(rep, b));
        for (std::size_t i = 0; i < img.size(); ++i) {
            if (i == b) {
                EXPECT_EQ(img[i], LaurentSeries::monomial(GaussianRational(1), pairing(weights[b], lambda)));
            } else {
                EXPECT_TRUE(img[i].is_exact_zero());
            }
        }
    }
}

TEST(Deg, Examples)
{
    for (std::size_t m = 1; m <= 4; ++m) {
        EXPECT_EQ(deg(RepExpr::std_rep(m)).degree, 1);
        for (std::size_t k = 1; k <= 4; ++k) {
            EXPECT_EQ(deg(RepExpr::sym(k, RepExpr::std_rep(m))).degree, static_cast<std::int64_t>(k));
        }
    }
    EXPECT_EQ(deg(RepExpr::tensor(sym22, RepExpr::sym(3, std2))).degree, 5);
    EXPECT_EQ(deg(RepExpr::triv()).degree, 1);
    EXPECT_THROW(deg(RepExpr::dual(std2), false), UnnormalizableWeights);
    const auto d = deg(RepExpr::dual(std2));
    EXPECT_EQ(d.det_shift, 1);
}

TEST(Deg, AdditiveOnTensorsOfNonnegativeReps)
{
    gen::Random rng(47);
    for (int t = 0; t < 30; ++t) {
        const std::size_t m = 2;
        const auto a = RepExpr::sym(static_cast<std::size_t>(rng.uniform(1, 3)), RepExpr::std_rep(m));
        const auto b = rng.chance(0.5) ? RepExpr::mat(m) : RepExpr::sym(2, RepExpr::std_rep(m));
        EXPECT_EQ(deg(RepExpr::tensor(a, b)).degree, deg(a).degree + deg(b).degree);
    }
}

TEST(WeightPolytope, Examples)
{
    EXPECT_EQ(weight_polytope(sym22, TorusData::diagonal(2)), (std::vector<std::vector<Rational>>{pt({0, 2}), pt({2, 0})}));
    EXPECT_EQ(weight_polytope(RepExpr::triv(), TorusData::diagonal(2)), (std::vector<std::vector<Rational>>{pt({0, 0})}));
    EXPECT_EQ(weight_polytope(RepExpr::direct_sum(std2, RepExpr::dual(std2)), TorusData::diagonal(2)),
              (std::vector<std::vector<Rational>>{pt({-1, 0}), pt({0, -1}), pt({0, 1}), pt({1, 0})}));
    EXPECT_THROW(weight_polytope(RepExpr::std_rep(5), TorusData::diagonal(5)), RankTooLarge);
}
