#include <cmath>
#include <sstream>

#include <gtest/gtest.h>

#include "arcstab/errors.hpp"
#include "arcstab/slope.hpp"
#include "generators.hpp"

using namespace arcstab;

namespace {

const RepExpr std2 = RepExpr::std_rep(2);
const RepExpr sym22 = RepExpr::sym(2, RepExpr::std_rep(2));
const RepVector one = RepVector::from_named(RepExpr::triv(), {{"1", "1"}});

RepVector vec(const RepExpr& r, std::vector<std::pair<std::string, std::string>> e)
{
    return RepVector::from_named(r, e);
}

ArcMatrix unipotent()
{
    return ArcMatrix::unchecked(2, {parse_series("1"), parse_series("z^-1"), parse_series("0"), parse_series("1")});
}

} // namespace

TEST(Slope, DefaultSamples)
{
    const auto zs = default_samples();
    ASSERT_EQ(zs.size(), 7u);
    EXPECT_DOUBLE_EQ(zs.front(), 1e-2);
    EXPECT_NEAR(zs.back(), 1e-5, 1e-20);
}

TEST(Slope, LogNormExamples)
{
    const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(2, 2);
    EXPECT_NEAR(log_norm(id, one), 0.0, 1e-12);
    EXPECT_NEAR(log_norm(2.0 * id, RepVector::basis(std2, 0)), std::log(2.0), 1e-12);
    Eigen::MatrixXcd d = Eigen::MatrixXcd::Zero(2, 2);
    d(0, 0) = 10.0;
    d(1, 1) = 0.1;
    EXPECT_NEAR(log_norm(d, vec(sym22, {{"e1^2", "1"}})), 2.0 * std::log(10.0), 1e-12);
    EXPECT_NEAR(log_norm(std::vector<std::complex<double>>{{3.0, 0.0}, {0.0, 4.0}}), std::log(5.0), 1e-12);
    EXPECT_NEAR(log_norm(std::vector<std::complex<double>>{{1e200, 0.0}, {1e200, 0.0}}),
                200.0 * std::log(10.0) + 0.5 * std::log(2.0), 1e-9);
    EXPECT_THROW(log_norm(std::vector<std::complex<double>>{0.0, 0.0}), DomainError);
    EXPECT_NEAR(log_matrix_norm(id), 0.5 * std::log(2.0), 1e-12);
}

TEST(Slope, FitLineRecoversALine)
{
    const auto zs = default_samples();
    std::vector<double> values;
    for (double z : zs) {
        values.push_back(-3.0 * std::log(1.0 / z) + 0.25);
    }
    const auto f = fit_line(zs, values);
    EXPECT_NEAR(f.slope, -3.0, 1e-10);
    EXPECT_NEAR(f.intercept, 0.25, 1e-9);
    EXPECT_LT(f.residual, 1e-9);
    EXPECT_THROW(fit_line({1e-2, 1e-3, 1e-4}, {0, 0, 0}), InvalidArgument);
    EXPECT_THROW(fit_line({1e-2, 1e-3, 1e-3, 1e-4}, {0, 0, 0, 0}), InvalidArgument);
}

TEST(Slope, Examples)
{
    const auto zs = default_samples();
    const auto diag = from_cocharacter(std::vector<std::int64_t>{-1, 1});
    const Pair p(one, vec(sym22, {{"e1^2", "1"}}));
    EXPECT_NEAR(fit_slope(diag, p, zs).slope, -2.0, 1e-9);
    EXPECT_NEAR(fit_matrix_slope(unipotent(), zs).slope, 1.0, 0.05);
    const Pair q(vec(sym22, {{"e1^2", "1"}}), vec(sym22, {{"e1^2", "1"}}));
    EXPECT_NEAR(fit_norm_slope(unipotent(), q, zs).slope, 2.0, 0.05);
    EXPECT_NEAR(fit_slope(unipotent(), q, zs).slope, 0.0, 1e-9);
}

TEST(Slope, MatchesWeightOnRandomInstances)
{
    gen::Random rng(31);
    const auto zs = default_samples();
    for (int t = 0; t < 20; ++t) {
        const auto m = static_cast<std::size_t>(rng.uniform(1, 3));
        const auto rho = rng.arc(m, -2, 2, true);
        const Pair p(rng.vector(rng.rep(m, 12), 1.0), rng.vector(rng.rep(m, 12), 1.0));
        EXPECT_NEAR(fit_slope(rho, p, zs).slope, static_cast<double>(weight(rho, p)), 0.05);
        EXPECT_NEAR(fit_matrix_slope(rho, zs).slope, static_cast<double>(-min_entry_ord(rho)), 0.05);
    }
}

TEST(Slope, TwistedSlopeMatchesTwistedWeight)
{
    gen::Random rng(32);
    const auto zs = default_samples();
    const auto torus = TorusData::diagonal(2);
    for (int t = 0; t < 10; ++t) {
        const auto rho = from_cocharacter(std::vector<std::int64_t>{rng.uniform(-2, 2), rng.uniform(-2, 2)});
        const Pair p(rng.vector(rng.rep(2, 10), 1.0), rng.vector(rng.rep(2, 10), 1.0));
        const std::vector<long> num{static_cast<long>(rng.uniform(-6, 6)), static_cast<long>(rng.uniform(-6, 6))};
        std::vector<Rational> xi;
        std::vector<double> xd;
        for (long n : num) {
            Rational r{mpz_class(n), mpz_class(3)};
            r.canonicalize();
            xi.push_back(r);
            xd.push_back(static_cast<double>(n) / 3.0);
        }
        const double exact = twisted_weight(rho, xi, p, torus).get_d();
        EXPECT_NEAR(fit_twisted_slope(rho, p, torus, xd, zs).slope, exact, 0.05);
    }
}

TEST(TorusInfimum, RankZeroIsTheValueAtTheOrigin)
{
    const Pair p(vec(sym22, {{"e1*e2", "1"}}), one);
    const Eigen::MatrixXcd g = Eigen::MatrixXcd::Identity(2, 2);
    const auto r = torus_infimum(g, p, TorusData::trivial(2));
    EXPECT_TRUE(r.s.empty());
    EXPECT_NEAR(r.value, 2.0 * std::log(std::sqrt(2.0)), 1e-12);
}

TEST(TorusInfimum, SymmetricMinimizer)
{
    const Pair p(vec(sym22, {{"e1*e2", "1"}}), one);
    Eigen::MatrixXcd g = Eigen::MatrixXcd::Zero(2, 2);
    g(0, 0) = 5.0;
    g(1, 1) = 0.2;
    const TorusData sl2{1, {{1}, {-1}}};
    const auto r = torus_infimum(g, p, sl2);
    // t.g = diag(5 e^s, 0.2 e^-s) balances at e^s = 0.2.
    ASSERT_EQ(r.s.size(), 1u);
    EXPECT_NEAR(r.s[0], std::log(0.2), 1e-4);
    EXPECT_NEAR(r.value, std::log(2.0), 1e-6);
}

TEST(TorusInfimum, NeverAboveTheOrigin)
{
    gen::Random rng(33);
    const auto torus = TorusData::diagonal(2);
    for (int t = 0; t < 10; ++t) {
        const auto v = rng.vector(sym22, 1.0);
        const Pair p(v, one);
        const auto g = evaluate(rng.arc(2, -1, 1, true), {0.05, 0.0});
        const double at_origin = p.degV() * log_matrix_norm(g) - log_norm(g, v);
        EXPECT_LE(torus_infimum(g, p, torus).value, at_origin + 1e-9);
    }
}

TEST(ReducedSlope, ConvergesToTheReducedNorm)
{
    const auto zs = default_samples();
    const Pair p(vec(sym22, {{"e1*e2", "1"}}), vec(sym22, {{"e1*e2", "1"}}));
    const TorusData sl2{1, {{1}, {-1}}};
    const auto c = verify_reduced_slope(from_cocharacter(std::vector<std::int64_t>{1, -1}), p, sl2, zs);
    EXPECT_EQ(c.exact, 0);
    EXPECT_LT(c.slope_error, 0.05);
    EXPECT_LE(c.max_offset_deviation, 1e-3 * std::log(1.0 / zs.back()));
    ASSERT_EQ(c.xi_hat.size(), zs.size());
    EXPECT_NEAR(c.xi_hat.back()[0], -1.0, 0.05);

    const Pair q(vec(sym22, {{"e1^2", "1"}, {"e2^2", "1"}}), one);
    const auto d = verify_reduced_slope(ArcMatrix::identity(2), q, sl2, zs);
    EXPECT_EQ(d.exact, 0);
    EXPECT_LT(d.slope_error, 0.05);
}

TEST(Slope, PlotData)
{
    const auto zs = default_samples();
    const auto f = fit_matrix_slope(unipotent(), zs);
    std::ostringstream out;
    write_plot_data(out, f);
    std::istringstream in(out.str());
    double a = 0.0;
    double b = 0.0;
    std::size_t rows = 0;
    while (in >> a >> b) {
        EXPECT_NEAR(a, f.log_inv[rows], 1e-6);
        EXPECT_NEAR(b, f.values[rows], 1e-6);
        ++rows;
    }
    EXPECT_EQ(rows, zs.size());
}
