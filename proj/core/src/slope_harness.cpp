#include "arcstab/slope.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <ostream>
#include <random>

#include "arcstab/action.hpp"
#include "arcstab/errors.hpp"

namespace arcstab {

std::vector<double> default_samples()
{
    std::vector<double> zs;
    for (int i = 0; i <= 6; ++i) {
        zs.push_back(std::pow(10.0, -2.0 - 0.5 * i));
    }
    return zs;
}

Eigen::MatrixXcd evaluate(const ArcMatrix& rho, std::complex<double> z, double max_radius)
{
    const auto m = static_cast<Eigen::Index>(rho.dim());
    Eigen::MatrixXcd g(m, m);
    for (Eigen::Index i = 0; i < m; ++i) {
        for (Eigen::Index j = 0; j < m; ++j) {
            g(i, j) = rho(static_cast<std::size_t>(i), static_cast<std::size_t>(j)).eval(z, max_radius);
        }
    }
    return g;
}

namespace {

double logsumexp(const std::vector<double>& xs)
{
    const double hi = *std::max_element(xs.begin(), xs.end());
    double acc = 0.0;
    for (double x : xs) {
        acc += std::exp(x - hi);
    }
    return hi + std::log(acc);
}

} // namespace

double log_norm(const std::vector<std::complex<double>>& coords)
{
    std::vector<double> terms;
    for (const auto& c : coords) {
        const double a = std::abs(c);
        if (!std::isfinite(a)) {
            throw DomainError("non-finite coordinate in log_norm");
        }
        if (a > 0.0) {
            terms.push_back(2.0 * std::log(a));
        }
    }
    if (terms.empty()) {
        throw DomainError("log_norm of the zero vector");
    }
    return 0.5 * logsumexp(terms);
}

double log_norm(const Eigen::MatrixXcd& g, const RepVector& v)
{
    return log_norm(act(g, v));
}

double log_matrix_norm(const Eigen::MatrixXcd& g)
{
    return log_norm(std::vector<std::complex<double>>(g.data(), g.data() + g.size()));
}

SlopeFit fit_line(const std::vector<double>& magnitudes, const std::vector<double>& values)
{
    if (magnitudes.size() < 4 || magnitudes.size() != values.size()) {
        throw InvalidArgument("slope fit needs at least 4 samples with one value each");
    }
    for (std::size_t i = 0; i < magnitudes.size(); ++i) {
        if (!(magnitudes[i] > 0.0) || (i > 0 && !(magnitudes[i] < magnitudes[i - 1]))) {
            throw InvalidArgument("sample magnitudes must be positive and strictly decreasing");
        }
    }
    SlopeFit f;
    f.magnitudes = magnitudes;
    f.values = values;
    const auto n = static_cast<double>(values.size());
    double mx = 0.0;
    double my = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        f.log_inv.push_back(-std::log(magnitudes[i]));
        mx += f.log_inv.back();
        my += values[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0.0;
    double sxy = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        sxx += (f.log_inv[i] - mx) * (f.log_inv[i] - mx);
        sxy += (f.log_inv[i] - mx) * (values[i] - my);
    }
    f.slope = sxy / sxx;
    f.intercept = my - f.slope * mx;
    for (std::size_t i = 0; i < values.size(); ++i) {
        f.residual = std::max(f.residual, std::abs(values[i] - (f.slope * f.log_inv[i] + f.intercept)));
    }
    return f;
}

namespace {

template <class F>
SlopeFit sample(const std::vector<double>& zs, F&& value_at)
{
    std::vector<double> values;
    values.reserve(zs.size());
    for (double z : zs) {
        values.push_back(value_at(z));
    }
    return fit_line(zs, values);
}

Eigen::MatrixXcd twist_matrix(const TorusData& torus, const std::vector<double>& xi, double z)
{
    const auto m = static_cast<Eigen::Index>(torus.ambient.size());
    Eigen::MatrixXcd t = Eigen::MatrixXcd::Zero(m, m);
    for (Eigen::Index j = 0; j < m; ++j) {
        double e = 0.0;
        for (std::size_t c = 0; c < xi.size(); ++c) {
            e += static_cast<double>(torus.ambient[static_cast<std::size_t>(j)][c]) * xi[c];
        }
        t(j, j) = std::pow(z, e);
    }
    return t;
}

} // namespace

namespace {

// Evaluates an arc together with its exact inverse when a dual factor needs it.
class Evaluator {
public:
    Evaluator(const ArcMatrix& rho, bool need_inverse) : rho_(rho)
    {
        if (need_inverse) {
            inv_ = inverse(rho);
        }
    }

    Eigen::MatrixXcd g(double z) const { return evaluate(rho_, z); }
    std::optional<Eigen::MatrixXcd> g_inverse(double z) const
    {
        if (!inv_) {
            return std::nullopt;
        }
        return evaluate(*inv_, z);
    }

private:
    const ArcMatrix& rho_;
    std::optional<ArcMatrix> inv_;
};

double log_norm_with(const Eigen::MatrixXcd& g, const std::optional<Eigen::MatrixXcd>& g_inverse, const RepVector& v)
{
    return g_inverse ? log_norm(act(g, *g_inverse, v)) : log_norm(g, v);
}

} // namespace

SlopeFit fit_slope(const ArcMatrix& rho, const Pair& p, const std::vector<double>& zs)
{
    const Evaluator ev(rho, uses_inverse(p.V()) || uses_inverse(p.W()));
    return sample(zs, [&](double z) {
        const Eigen::MatrixXcd g = ev.g(z);
        const auto gi = ev.g_inverse(z);
        return log_norm_with(g, gi, p.v()) - log_norm_with(g, gi, p.w());
    });
}

SlopeFit fit_norm_slope(const ArcMatrix& rho, const Pair& p, const std::vector<double>& zs)
{
    const Evaluator ev(rho, uses_inverse(p.V()));
    return sample(zs, [&](double z) {
        const Eigen::MatrixXcd g = ev.g(z);
        return static_cast<double>(p.degV()) * log_matrix_norm(g) - log_norm_with(g, ev.g_inverse(z), p.v());
    });
}

SlopeFit fit_matrix_slope(const ArcMatrix& rho, const std::vector<double>& zs)
{
    return sample(zs, [&](double z) { return log_matrix_norm(evaluate(rho, z)); });
}

SlopeFit fit_twisted_slope(const ArcMatrix& rho, const Pair& p, const TorusData& torus, const std::vector<double>& xi,
                           const std::vector<double>& zs)
{
    torus.validate(rho.dim());
    if (xi.size() != torus.rank) {
        throw DimensionMismatch("twist has the wrong rank");
    }
    std::vector<double> neg(xi.size());
    for (std::size_t c = 0; c < xi.size(); ++c) {
        neg[c] = -xi[c];
    }
    const Evaluator ev(rho, uses_inverse(p.V()) || uses_inverse(p.W()));
    return sample(zs, [&](double z) {
        const Eigen::MatrixXcd g = ev.g(z) * twist_matrix(torus, xi, z);
        auto gi = ev.g_inverse(z);
        if (gi) {
            *gi = twist_matrix(torus, neg, z) * *gi;
        }
        return log_norm_with(g, gi, p.v()) - log_norm_with(g, gi, p.w());
    });
}

namespace {

// F(s) = d/2 LSE(2 log|G_ij| + 2<mu_i, s>) - 1/2 LSE(2 log|x_k| + 2<lambda_k, s>)
class NormFunctional {
public:
    NormFunctional(const Eigen::MatrixXcd& g, const Eigen::MatrixXcd* g_inverse, const Pair& p, const TorusData& torus)
        : d_(static_cast<double>(p.degV())), rank_(torus.rank)
    {
        for (Eigen::Index i = 0; i < g.rows(); ++i) {
            for (Eigen::Index j = 0; j < g.cols(); ++j) {
                const double a = std::abs(g(i, j));
                if (a > 0.0) {
                    e_.push_back({2.0 * std::log(a), to_vec(torus.ambient[static_cast<std::size_t>(i)])});
                }
            }
        }
        const auto x = g_inverse ? act(g, *g_inverse, p.v()) : act(g, p.v());
        const auto weights = basis_weights(p.V(), torus);
        for (std::size_t k = 0; k < x.size(); ++k) {
            const double a = std::abs(x[k]);
            if (a > 0.0) {
                v_.push_back({2.0 * std::log(a), to_vec(weights[k])});
            }
        }
        if (e_.empty() || v_.empty()) {
            throw DomainError("norm functional of a zero matrix or vector");
        }
    }

    double operator()(const Eigen::VectorXd& s, Eigen::VectorXd* grad) const
    {
        Eigen::VectorXd ge;
        Eigen::VectorXd gv;
        const double fe = half_lse(e_, s, grad ? &ge : nullptr);
        const double fv = half_lse(v_, s, grad ? &gv : nullptr);
        if (grad) {
            *grad = d_ * ge - gv;
        }
        return d_ * fe - fv;
    }

    std::size_t rank() const { return rank_; }

private:
    struct Term {
        double log_sq;
        Eigen::VectorXd weight;
    };

    static Eigen::VectorXd to_vec(const WeightVector& w)
    {
        Eigen::VectorXd v(static_cast<Eigen::Index>(w.size()));
        for (std::size_t c = 0; c < w.size(); ++c) {
            v(static_cast<Eigen::Index>(c)) = static_cast<double>(w[c]);
        }
        return v;
    }

    // 0.5 * LSE(log_sq + 2<w, s>) and its gradient (softmax-weighted mean of w).
    double half_lse(const std::vector<Term>& terms, const Eigen::VectorXd& s, Eigen::VectorXd* grad) const
    {
        std::vector<double> xs;
        xs.reserve(terms.size());
        for (const auto& t : terms) {
            xs.push_back(t.log_sq + (rank_ ? 2.0 * t.weight.dot(s) : 0.0));
        }
        const double hi = *std::max_element(xs.begin(), xs.end());
        double z = 0.0;
        Eigen::VectorXd acc = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(rank_));
        for (std::size_t k = 0; k < terms.size(); ++k) {
            const double w = std::exp(xs[k] - hi);
            z += w;
            if (grad && rank_) {
                acc += w * terms[k].weight;
            }
        }
        if (grad) {
            *grad = acc / z;
        }
        return 0.5 * (hi + std::log(z));
    }

    double d_;
    std::size_t rank_;
    std::vector<Term> e_;
    std::vector<Term> v_;
};

struct DescentResult {
    double value;
    Eigen::VectorXd s;
    int iterations;
    bool converged;
};

DescentResult bfgs(const NormFunctional& f, Eigen::VectorXd s, const DescentOptions& opt)
{
    const auto r = static_cast<Eigen::Index>(f.rank());
    const double gtol = opt.tolerance * 1e-3;
    const double stall_gtol = std::sqrt(opt.tolerance) * 1e-2;
    Eigen::MatrixXd H = Eigen::MatrixXd::Identity(r, r);
    Eigen::VectorXd g;
    double fx = f(s, &g);
    for (int it = 0; it < opt.max_iterations; ++it) {
        if (g.lpNorm<Eigen::Infinity>() <= gtol) {
            return {fx, s, it, true};
        }
        if (fx < -1e8) {
            return {fx, s, it, false};
        }
        Eigen::VectorXd dir = -H * g;
        double slope = dir.dot(g);
        if (!(slope < 0.0)) {
            H.setIdentity();
            dir = -g;
            slope = dir.dot(g);
        }
        double step = 1.0;
        Eigen::VectorXd s_new;
        Eigen::VectorXd g_new;
        double f_new = fx;
        bool accepted = false;
        for (int bt = 0; bt < 60; ++bt) {
            s_new = s + step * dir;
            f_new = f(s_new, &g_new);
            if (f_new <= fx + 1e-4 * step * slope) {
                accepted = true;
                break;
            }
            step *= 0.5;
        }
        if (!accepted) {
            // No further decrease is representable in double precision.
            return {fx, s, it, g.lpNorm<Eigen::Infinity>() <= stall_gtol};
        }
        const Eigen::VectorXd sv = s_new - s;
        const Eigen::VectorXd y = g_new - g;
        const double sy = sv.dot(y);
        if (sy > 1e-14) {
            const double rho = 1.0 / sy;
            const Eigen::MatrixXd I = Eigen::MatrixXd::Identity(r, r);
            H = (I - rho * sv * y.transpose()) * H * (I - rho * y * sv.transpose()) + rho * sv * sv.transpose();
        }
        s = s_new;
        g = g_new;
        fx = f_new;
    }
    return {fx, s, opt.max_iterations, g.lpNorm<Eigen::Infinity>() <= stall_gtol};
}

} // namespace

namespace {

TorusMinimum infimum(const Eigen::MatrixXcd& g, const Eigen::MatrixXcd* g_inverse, const Pair& p,
                     const TorusData& torus, const DescentOptions& options)
{
    torus.validate(static_cast<std::size_t>(g.rows()));
    const NormFunctional f(g, g_inverse, p, torus);
    const auto r = static_cast<Eigen::Index>(torus.rank);
    if (r == 0) {
        return TorusMinimum{f(Eigen::VectorXd(0), nullptr), {}, 0};
    }
    std::mt19937 rng(options.seed);
    std::uniform_real_distribution<double> unit(-options.restart_radius, options.restart_radius);
    std::optional<DescentResult> best;
    int total_iterations = 0;
    for (int start = 0; start <= options.restarts; ++start) {
        Eigen::VectorXd s0 = Eigen::VectorXd::Zero(r);
        if (start > 0) {
            for (Eigen::Index c = 0; c < r; ++c) {
                s0(c) = unit(rng);
            }
        }
        DescentResult res = bfgs(f, s0, options);
        total_iterations += res.iterations;
        if (res.converged && (!best || res.value < best->value)) {
            best = std::move(res);
        }
    }
    if (!best) {
        throw NotConverged("torus descent did not reach a stationary point within " +
                           std::to_string(options.max_iterations) + " iterations");
    }
    return TorusMinimum{best->value, std::vector<double>(best->s.data(), best->s.data() + best->s.size()),
                        total_iterations};
}

} // namespace

TorusMinimum torus_infimum(const Eigen::MatrixXcd& g, const Pair& p, const TorusData& torus,
                           const DescentOptions& options)
{
    return infimum(g, nullptr, p, torus, options);
}

TorusMinimum torus_infimum(const Eigen::MatrixXcd& g, const Eigen::MatrixXcd& g_inverse, const Pair& p,
                           const TorusData& torus, const DescentOptions& options)
{
    return infimum(g, &g_inverse, p, torus, options);
}

ReducedSlopeCheck verify_reduced_slope(const ArcMatrix& rho, const Pair& p, const TorusData& torus,
                                       const std::vector<double>& zs, const DescentOptions& options)
{
    ReducedSlopeCheck out;
    out.exact = reduced_norm(rho, p, torus).value;
    std::vector<double> values;
    const Evaluator ev(rho, uses_inverse(p.V()));
    for (double z : zs) {
        const auto gi = ev.g_inverse(z);
        const TorusMinimum tm = infimum(ev.g(z), gi ? &*gi : nullptr, p, torus, options);
        values.push_back(tm.value);
        const double L = -std::log(z);
        std::vector<double> xi;
        for (double s : tm.s) {
            xi.push_back(-s / L);
        }
        out.xi_hat.push_back(std::move(xi));
    }
    out.fit = fit_line(zs, values);
    const double exact = out.exact.get_d();
    out.slope_error = std::abs(out.fit.slope - exact);
    double offset = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        offset += values[i] - exact * out.fit.log_inv[i];
    }
    offset /= static_cast<double>(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        const double dev = std::abs(values[i] - exact * out.fit.log_inv[i] - offset);
        out.max_offset_deviation = std::max(out.max_offset_deviation, dev);
        out.max_relative_deviation = std::max(out.max_relative_deviation, dev / out.fit.log_inv[i]);
    }
    return out;
}

void write_plot_data(std::ostream& out, const SlopeFit& fit)
{
    const auto old = out.precision(12);
    for (std::size_t i = 0; i < fit.values.size(); ++i) {
        out << fit.log_inv[i] << ' ' << fit.values[i] << '\n';
    }
    out.precision(old);
}

} // namespace arcstab
