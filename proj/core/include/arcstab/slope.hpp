#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include <Eigen/Dense>

#include "arcstab/stability.hpp"

namespace arcstab {

/// |z| = 10^-2, 10^-2.5, ..., 10^-5.
std::vector<double> default_samples();

/// Entrywise evaluation of an arc at z.
Eigen::MatrixXcd evaluate(const ArcMatrix& rho, std::complex<double> z, double max_radius = kDefaultEvalRadius);

/// log of the Euclidean norm, evaluated as 0.5 * logsumexp(2 log|x_i|) so
/// that huge or tiny coordinates do not overflow. DomainError for zero.
double log_norm(const std::vector<std::complex<double>>& coords);
double log_norm(const Eigen::MatrixXcd& g, const RepVector& v);
/// log of the Frobenius norm.
double log_matrix_norm(const Eigen::MatrixXcd& g);

/// Least-squares line value = slope * log(1/|z|) + intercept.
struct SlopeFit {
    std::vector<double> magnitudes;
    std::vector<double> log_inv; // log(1/|z|)
    std::vector<double> values;
    double slope = 0.0;
    double intercept = 0.0;
    double residual = 0.0; // max |value - line|
};

/// Requires at least 4 strictly decreasing magnitudes.
SlopeFit fit_line(const std::vector<double>& magnitudes, const std::vector<double>& values);

/// f = log|rho(z).v| - log|rho(z).w|; slope tends to nu(rho, [v, w]).
SlopeFit fit_slope(const ArcMatrix& rho, const Pair& p, const std::vector<double>& zs);
/// degV log|rho(z)| - log|rho(z).v|; slope tends to the analytic norm.
SlopeFit fit_norm_slope(const ArcMatrix& rho, const Pair& p, const std::vector<double>& zs);
/// log|rho(z)|; slope tends to -min entry ord.
SlopeFit fit_matrix_slope(const ArcMatrix& rho, const std::vector<double>& zs);
/// f along the arc twisted by the real cocharacter xi of the torus.
SlopeFit fit_twisted_slope(const ArcMatrix& rho, const Pair& p, const TorusData& torus, const std::vector<double>& xi,
                           const std::vector<double>& zs);

struct DescentOptions {
    int max_iterations = 5000;
    double tolerance = 1e-6; // on the value
    int restarts = 4;
    double restart_radius = 2.0;
    std::uint32_t seed = 20240607;
};

struct TorusMinimum {
    double value = 0.0;
    std::vector<double> s; // torus log-coordinates: t = diag(exp(<mu_j, s>))
    int iterations = 0;
};

/// Minimizes F(s) = degV log|t.g| - log|t.g.v| over s in R^rank with a
/// quasi-Newton descent (closed-form gradient, Armijo backtracking) from
/// s = 0 plus seeded random restarts. Throws NotConverged if no start
/// reaches a stationary point within the iteration cap.
TorusMinimum torus_infimum(const Eigen::MatrixXcd& g, const Pair& p, const TorusData& torus,
                           const DescentOptions& options = {});
/// Same, with the inverse of g supplied for dual factors.
TorusMinimum torus_infimum(const Eigen::MatrixXcd& g, const Eigen::MatrixXcd& g_inverse, const Pair& p,
                           const TorusData& torus, const DescentOptions& options = {});

struct ReducedSlopeCheck {
    SlopeFit fit;                           // torus infimum against log(1/|z|)
    Rational exact;                         // exact reduced norm
    double slope_error = 0.0;               // |fit.slope - exact|
    double max_offset_deviation = 0.0;      // after removing the O(1) offset
    double max_relative_deviation = 0.0;    // the same, divided by log(1/|z|)
    std::vector<std::vector<double>> xi_hat; // -s / log(1/|z|) per sample
};

/// Fits the slope of the torus infimum of the norm functional and compares
/// it with the exact reduced norm. The offset term is the least-squares
/// intercept under the exact slope.
ReducedSlopeCheck verify_reduced_slope(const ArcMatrix& rho, const Pair& p, const TorusData& torus,
                                       const std::vector<double>& zs, const DescentOptions& options = {});

/// Two whitespace-separated columns: log(1/|z|) and the functional value.
void write_plot_data(std::ostream& out, const SlopeFit& fit);

} // namespace arcstab
