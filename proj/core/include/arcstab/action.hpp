#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "arcstab/arc_matrix.hpp"
#include "arcstab/rep_vector.hpp"

namespace arcstab {

/// Coordinates of g.v in the canonical basis of v.rep(). std acts by the
/// matrix-vector product, mat by left multiplication, sym by substitution
/// in the monomial basis (multinomial coefficients appear), dual by the
/// inverse transpose, tensor and direct sum factorwise. Throws
/// DimensionMismatch when the ambient dimension differs from g.
std::vector<LaurentSeries> act(const ArcMatrix& g, const RepVector& v, int working_precision = kDefaultPrecision);

/// Same action on an arbitrary dense coordinate vector of `rep`.
std::vector<LaurentSeries> act(const ArcMatrix& g, const RepExpr& rep, std::vector<LaurentSeries> coords,
                               int working_precision = kDefaultPrecision);

/// Floating-point action of a constant complex matrix.
std::vector<std::complex<double>> act(const Eigen::MatrixXcd& g, const RepVector& v);
std::vector<std::complex<double>> act(const Eigen::MatrixXcd& g, const RepExpr& rep,
                                      std::vector<std::complex<double>> coords);
/// Same, with the inverse supplied for dual factors. Inverting an evaluated
/// arc near z = 0 is ill-conditioned; evaluate the exact inverse instead.
std::vector<std::complex<double>> act(const Eigen::MatrixXcd& g, const Eigen::MatrixXcd& g_inverse,
                                      const RepVector& v);

/// True when `rep` contains a dual factor.
bool uses_inverse(const RepExpr& rep);

} // namespace arcstab
