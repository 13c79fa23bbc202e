#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "arcstab/pair.hpp"

namespace arcstab {

/// Throws NonCommutingTorus unless rho commutes with every generator
/// cocharacter of the torus.
void check_commutes(const ArcMatrix& rho, const TorusData& torus);

/// min_i(ord b_i + <lambda^W_i, xi>) - min_i(ord a_i + <lambda^V_i, xi>)
/// with a = rho.v, b = rho.w.
Rational twisted_weight(const ArcMatrix& rho, const std::vector<Rational>& xi, const Pair& p,
                        const TorusData& torus, int working_precision = kDefaultPrecision);
double twisted_weight(const ArcMatrix& rho, const std::vector<double>& xi, const Pair& p, const TorusData& torus,
                      int working_precision = kDefaultPrecision);

/// (order, torus weight) of the nonzero coordinates, keeping the lowest
/// order per weight; weights in ascending order.
struct WeightedOrders {
    std::vector<std::int64_t> orders;
    std::vector<WeightVector> weights;
};

/// Data of the twisted norm
///   N(xi) = degV * max_j(-ord e_j - <mu_j, xi>) - max_i(-ord a_i - <lambda_i, xi>)
/// where e_j runs over the entries of rho (weight of the row) and a_i over
/// the coordinates of rho.v.
struct NormData {
    std::int64_t degV = 1;
    std::size_t rank = 0;
    WeightedOrders entries;
    WeightedOrders coords;
};

NormData norm_data(const ArcMatrix& rho, const Pair& p, const TorusData& torus,
                   int working_precision = kDefaultPrecision);

Rational twisted_norm(const NormData& d, const std::vector<Rational>& xi);
double twisted_norm(const NormData& d, const std::vector<double>& xi);

struct ReducedNorm {
    Rational value;
    std::vector<Rational> minimizer;
    bool attained = true;
    bool proper = true;
};

/// Exact infimum of N over R^rank: one LP per linear piece of the
/// subtracted maximum, minimum over pieces. Throws NotProper if the
/// infimum is -infinity.
ReducedNorm reduced_norm(const NormData& d);
ReducedNorm reduced_norm(const ArcMatrix& rho, const Pair& p, const TorusData& torus,
                         int working_precision = kDefaultPrecision);

struct Properness {
    bool proper = true;
    /// Nonzero direction along which the recession function is <= 0.
    std::vector<Rational> witness;
};

/// The recession function R(eta) = min_i max_j <lambda_i - degV mu_j, eta>
/// is positive away from 0 iff no i admits a nonzero eta with every
/// <lambda_i - degV mu_j, eta> <= 0; each such eta is searched by an exact
/// LP on the faces of the unit cube, so the answer is certified in every
/// rank.
Properness is_proper(const NormData& d);
Properness is_proper(const ArcMatrix& rho, const Pair& p, const TorusData& torus,
                     int working_precision = kDefaultPrecision);

enum class CheckKind { semistable, stable, polystable };

/// 1/(k+1); throws InvalidArgument for k < 1.
Rational epsilon_from_k(std::int64_t k);

struct NamedArc {
    std::string name;
    ArcMatrix arc;
};

struct ArcRecord {
    std::string arc;
    std::int64_t weight = 0;
    std::int64_t m_v = 0;
    std::int64_t m_w = 0;
    std::optional<std::int64_t> norm;
    std::optional<ReducedNorm> reduced;
    Rational lhs; // nu
    Rational rhs; // 0, eps * norm or eps * reduced norm
    bool violation = false;
};

struct StabilityReport {
    CheckKind kind = CheckKind::semistable;
    Rational epsilon;
    SlotOrder order = SlotOrder::analytic;
    bool override_proper = false;
    std::vector<ArcRecord> records;
    bool violation = false;
    std::optional<std::size_t> destabilizer; // first violating record
    std::string verdict;
};

inline constexpr const char* kNoViolation = "no violation among supplied arcs";
inline constexpr const char* kDestabilizer = "explicit destabilizer found";

/// nu >= 0 for each supplied arc. A clean report never claims semistability
/// against arcs that were not supplied.
StabilityReport check_semistable(const Pair& p, const std::vector<NamedArc>& arcs,
                                 int working_precision = kDefaultPrecision);

/// nu >= epsilon * norm for each supplied arc.
StabilityReport check_stable(const Pair& p, const std::vector<NamedArc>& arcs, const Rational& epsilon,
                             SlotOrder order = SlotOrder::analytic, int working_precision = kDefaultPrecision);

/// nu >= epsilon * reduced norm for each supplied arc. Throws NotProper for
/// an arc whose norm functional is not proper unless override_proper.
StabilityReport check_polystable(const Pair& p, const std::vector<NamedArc>& arcs, const Rational& epsilon,
                                 const TorusData& torus, bool override_proper = false,
                                 int working_precision = kDefaultPrecision);

/// Recompute violation flags, destabilizer and verdict from the records.
void finalize_verdict(StabilityReport& report);

} // namespace arcstab
