#include "arcstab/pair.hpp"

#include <limits>

#include "arcstab/action.hpp"
#include "arcstab/errors.hpp"

namespace arcstab {

Pair::Pair(RepVector v, RepVector w) : v_(std::move(v)), w_(std::move(w))
{
    if (v_.is_zero() || w_.is_zero()) {
        throw InvalidArgument("pair components must be nonzero");
    }
    const auto a = v_.rep().ambient();
    const auto b = w_.rep().ambient();
    if (a && b && *a != *b) {
        throw DimensionMismatch("V and W are representations of different groups");
    }
    ambient_ = a ? a : b;
    degree_ = deg(v_.rep());
}

std::int64_t min_order(const std::vector<LaurentSeries>& coords)
{
    std::optional<std::int64_t> best;
    std::optional<std::int64_t> lowest_unknown;
    for (const auto& c : coords) {
        if (c.is_normal()) {
            best = best ? std::min(*best, c.lead()) : c.lead();
        } else if (c.is_placeholder()) {
            lowest_unknown = lowest_unknown ? std::min(*lowest_unknown, c.lead()) : c.lead();
        }
    }
    if (lowest_unknown && (!best || *lowest_unknown < *best)) {
        throw PrecisionExhausted("minimum order undecidable: a coordinate is O(z^" +
                                 std::to_string(*lowest_unknown) + ")");
    }
    if (!best) {
        throw InvalidArgument("minimum order of the zero vector");
    }
    return *best;
}

WeightDetails weight_details(const ArcMatrix& rho, const Pair& p, int working_precision)
{
    WeightDetails d;
    d.m_v = -min_order(act(rho, p.v(), working_precision));
    d.m_w = -min_order(act(rho, p.w(), working_precision));
    d.nu = d.m_v - d.m_w;
    return d;
}

std::int64_t weight(const ArcMatrix& rho, const Pair& p, int working_precision)
{
    return weight_details(rho, p, working_precision).nu;
}

Specialization specialize(const std::vector<LaurentSeries>& coords)
{
    bool any = false;
    std::int64_t deepest_pole = std::numeric_limits<std::int64_t>::min();
    for (const auto& c : coords) {
        if (c.is_normal()) {
            any = true;
            deepest_pole = std::max(deepest_pole, -c.lead());
        }
    }
    if (!any) {
        throw PrecisionExhausted("no coordinate has a known nonzero term");
    }
    // Walk down from the deepest known pole: the first degree at which the
    // reduction mod z is nonzero and nothing unknown could be lower.
    for (std::int64_t d = deepest_pole;; --d) {
        Specialization s{d, {}};
        bool nonzero = false;
        for (const auto& c : coords) {
            const LaurentSeries scaled = c.shifted(d);
            if (scaled.is_placeholder() && scaled.lead() < 0) {
                throw PrecisionExhausted("specialization undecidable: coordinate " + c.to_string());
            }
            GaussianRational v = scaled.is_placeholder() ? GaussianRational{} : scaled.coefficient(0);
            nonzero = nonzero || !v.is_zero();
            s.point.push_back(std::move(v));
        }
        if (nonzero) {
            return s;
        }
    }
}

std::int64_t weight_via_specialization(const ArcMatrix& rho, const Pair& p, int working_precision)
{
    const auto sv = specialize(act(rho, p.v(), working_precision));
    const auto sw = specialize(act(rho, p.w(), working_precision));
    return sv.degree - sw.degree;
}

NormDetails norm_details(const ArcMatrix& rho, const Pair& p, SlotOrder order, int working_precision)
{
    NormDetails d;
    d.order = order;
    d.degV = p.degV();
    d.m_e = -min_entry_ord(rho);
    d.m_v = -min_order(act(rho, p.v(), working_precision));
    const std::int64_t analytic = d.degV * d.m_e - d.m_v;
    d.value = order == SlotOrder::analytic ? analytic : -analytic;
    return d;
}

std::int64_t norm(const ArcMatrix& rho, const Pair& p, SlotOrder order, int working_precision)
{
    return norm_details(rho, p, order, working_precision).value;
}

Pair augmented_pair(const Pair& p, std::int64_t k, SlotOrder order, std::size_t cap)
{
    if (k < 1) {
        throw InvalidArgument("augmented pair needs k >= 1");
    }
    if (!p.ambient()) {
        throw InvalidArgument("augmented pair needs a nontrivial group action to place the identity");
    }
    const std::size_t m = *p.ambient();
    const auto kk = static_cast<std::size_t>(k);
    const RepVector e_power = tensor_power(identity_element(m), static_cast<std::size_t>(p.degV()), cap);
    if (order == SlotOrder::paper) {
        RepVector first = tensor(e_power, tensor_power(p.v(), kk, cap));
        first.rep().dim(cap);
        return Pair(std::move(first), tensor_power(p.w(), kk + 1, cap));
    }
    RepVector second = tensor(e_power, tensor_power(p.w(), kk + 1, cap));
    second.rep().dim(cap);
    return Pair(tensor_power(p.v(), kk + 2, cap), std::move(second));
}

} // namespace arcstab
