#include "arcstab/action.hpp"

#include "action_impl.hpp"

namespace arcstab {

namespace {

struct ExactTraits {
    using Scalar = LaurentSeries;
    using Matrix = ArcMatrix;
    int wp;

    std::size_t dim(const ArcMatrix& g) const { return g.dim(); }
    const LaurentSeries& entry(const ArcMatrix& g, std::size_t i, std::size_t j) const { return g(i, j); }
    ArcMatrix inverse(const ArcMatrix& g) const { return arcstab::inverse(g, wp); }
    bool is_zero(const LaurentSeries& s) const { return s.is_exact_zero(); }
    LaurentSeries zero() const { return {}; }
    LaurentSeries one() const { return LaurentSeries::one(); }
};

struct FloatTraits {
    using Scalar = std::complex<double>;
    using Matrix = Eigen::MatrixXcd;

    std::size_t dim(const Eigen::MatrixXcd& g) const { return static_cast<std::size_t>(g.rows()); }
    std::complex<double> entry(const Eigen::MatrixXcd& g, std::size_t i, std::size_t j) const
    {
        return g(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
    }
    Eigen::MatrixXcd inverse(const Eigen::MatrixXcd& g) const
    {
        Eigen::FullPivLU<Eigen::MatrixXcd> lu(g);
        if (!lu.isInvertible()) {
            throw SingularMatrix("constant matrix is not invertible");
        }
        return lu.inverse();
    }
    bool is_zero(const std::complex<double>& s) const { return s == std::complex<double>(0.0, 0.0); }
    std::complex<double> zero() const { return {0.0, 0.0}; }
    std::complex<double> one() const { return {1.0, 0.0}; }
};

} // namespace

std::vector<LaurentSeries> act(const ArcMatrix& g, const RepExpr& rep, std::vector<LaurentSeries> coords,
                               int working_precision)
{
    detail::check_ambient(rep, g.dim(), coords.size());
    detail::Actor<ExactTraits> actor(g, ExactTraits{working_precision});
    return actor.apply(rep, std::move(coords), false);
}

std::vector<LaurentSeries> act(const ArcMatrix& g, const RepVector& v, int working_precision)
{
    std::vector<LaurentSeries> x(v.dim());
    for (const auto& [i, c] : v.coords()) {
        x[i] = LaurentSeries::constant(c);
    }
    return act(g, v.rep(), std::move(x), working_precision);
}

std::vector<std::complex<double>> act(const Eigen::MatrixXcd& g, const RepExpr& rep,
                                      std::vector<std::complex<double>> coords)
{
    if (g.rows() != g.cols()) {
        throw DimensionMismatch("group element must be square");
    }
    detail::check_ambient(rep, static_cast<std::size_t>(g.rows()), coords.size());
    detail::Actor<FloatTraits> actor(g, FloatTraits{});
    return actor.apply(rep, std::move(coords), false);
}

std::vector<std::complex<double>> act(const Eigen::MatrixXcd& g, const RepVector& v)
{
    std::vector<std::complex<double>> x(v.dim());
    for (const auto& [i, c] : v.coords()) {
        x[i] = c.to_complex();
    }
    return act(g, v.rep(), std::move(x));
}

std::vector<std::complex<double>> act(const Eigen::MatrixXcd& g, const Eigen::MatrixXcd& g_inverse,
                                      const RepVector& v)
{
    if (g.rows() != g.cols() || g_inverse.rows() != g.rows() || g_inverse.cols() != g.cols()) {
        throw DimensionMismatch("group element and inverse must be square of equal size");
    }
    std::vector<std::complex<double>> x(v.dim());
    for (const auto& [i, c] : v.coords()) {
        x[i] = c.to_complex();
    }
    detail::check_ambient(v.rep(), static_cast<std::size_t>(g.rows()), x.size());
    detail::Actor<FloatTraits> actor(g, g_inverse, FloatTraits{});
    return actor.apply(v.rep(), std::move(x), false);
}

bool uses_inverse(const RepExpr& rep)
{
    switch (rep.kind()) {
    case RepExpr::Kind::dual:
        return true;
    case RepExpr::Kind::sym:
        return uses_inverse(rep.child());
    case RepExpr::Kind::tensor:
    case RepExpr::Kind::direct_sum:
        return uses_inverse(rep.left()) || uses_inverse(rep.right());
    default:
        return false;
    }
}

} // namespace arcstab
