#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "arcstab/arc_matrix.hpp"
#include "arcstab/rep_vector.hpp"
#include "arcstab/weights.hpp"

namespace arcstab {

/// Which slot carries the identity matrix in the norm pair.
///  - analytic: norm = degV * m_e - m_v, the slope of degV log|g| - log|g.v|
///  - paper: nu(rho, [v, e^{(x) degV}]) = m_v - degV * m_e, its negative
enum class SlotOrder { paper, analytic };

/// A pair [v, w] with v in V and w in W, both nonzero.
class Pair {
public:
    /// Throws InvalidArgument for a zero vector and DimensionMismatch when
    /// V and W live over different groups.
    Pair(RepVector v, RepVector w);

    const RepExpr& V() const { return v_.rep(); }
    const RepExpr& W() const { return w_.rep(); }
    const RepVector& v() const { return v_; }
    const RepVector& w() const { return w_; }
    std::int64_t degV() const { return degree_.degree; }
    std::int64_t det_shift() const { return degree_.det_shift; }
    /// Group dimension m, or nullopt if both V and W are trivial.
    std::optional<std::size_t> ambient() const { return ambient_; }

private:
    RepVector v_;
    RepVector w_;
    Degree degree_;
    std::optional<std::size_t> ambient_;
};

/// Minimum order over the coordinates. Throws PrecisionExhausted if a
/// placeholder could undercut it or every coordinate is unknown, and
/// InvalidArgument for the exact zero vector.
std::int64_t min_order(const std::vector<LaurentSeries>& coords);

struct WeightDetails {
    std::int64_t nu = 0;
    std::int64_t m_v = 0; // -min ord(rho.v)
    std::int64_t m_w = 0; // -min ord(rho.w)
};

/// nu(rho, [v, w]) = min ord(rho.w) - min ord(rho.v).
WeightDetails weight_details(const ArcMatrix& rho, const Pair& p, int working_precision = kDefaultPrecision);
std::int64_t weight(const ArcMatrix& rho, const Pair& p, int working_precision = kDefaultPrecision);

/// z^degree * x is integral and reduces to `point` != 0 at z = 0.
struct Specialization {
    std::int64_t degree = 0;
    std::vector<GaussianRational> point;
};

/// Degree of the pole of the coordinate vector, found by locating the
/// specialization of the line through it.
Specialization specialize(const std::vector<LaurentSeries>& coords);

/// m_v - m_w computed from the two specialization degrees.
std::int64_t weight_via_specialization(const ArcMatrix& rho, const Pair& p,
                                       int working_precision = kDefaultPrecision);

struct NormDetails {
    std::int64_t value = 0;
    std::int64_t m_e = 0; // -min entry ord(rho)
    std::int64_t m_v = 0;
    std::int64_t degV = 0;
    SlotOrder order = SlotOrder::analytic;
};

NormDetails norm_details(const ArcMatrix& rho, const Pair& p, SlotOrder order = SlotOrder::analytic,
                         int working_precision = kDefaultPrecision);
std::int64_t norm(const ArcMatrix& rho, const Pair& p, SlotOrder order = SlotOrder::analytic,
                  int working_precision = kDefaultPrecision);

/// paper order:    [e^{(x) degV} (x) v^{(x) k},  w^{(x) k+1}]
/// analytic order: [v^{(x) k+2},  e^{(x) degV} (x) w^{(x) k+1}]
/// In both orders the weight is (k+1) nu - norm(order). Throws
/// DimensionOverflow when a factor exceeds `cap`.
Pair augmented_pair(const Pair& p, std::int64_t k, SlotOrder order = SlotOrder::paper,
                    std::size_t cap = kDefaultDimensionCap);

} // namespace arcstab
