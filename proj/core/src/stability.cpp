#include "arcstab/stability.hpp"

#include <future>
#include <map>

#include "arcstab/action.hpp"
#include "arcstab/errors.hpp"
#include "stability_impl.hpp"

namespace arcstab {

namespace detail {

WeightedOrders weighted_orders(const std::vector<LaurentSeries>& coords, const std::vector<WeightVector>& weights)
{
    struct Slot {
        std::optional<std::int64_t> known;
        std::optional<std::int64_t> unknown;
    };
    std::map<WeightVector, Slot> slots;
    for (std::size_t i = 0; i < coords.size(); ++i) {
        const auto& c = coords[i];
        if (c.is_exact_zero()) {
            continue;
        }
        Slot& s = slots[weights[i]];
        auto& target = c.is_normal() ? s.known : s.unknown;
        target = target ? std::min(*target, c.lead()) : c.lead();
    }
    WeightedOrders out;
    for (const auto& [w, s] : slots) {
        if (s.unknown && (!s.known || *s.unknown < *s.known)) {
            throw PrecisionExhausted("a coordinate of torus weight class is O(z^" + std::to_string(*s.unknown) +
                                     "); its order cannot be certified");
        }
        out.orders.push_back(*s.known);
        out.weights.push_back(w);
    }
    if (out.orders.empty()) {
        throw InvalidArgument("coordinate vector is zero");
    }
    return out;
}

} // namespace detail

void check_commutes(const ArcMatrix& rho, const TorusData& torus)
{
    torus.validate(rho.dim());
    for (std::size_t l = 0; l < torus.rank; ++l) {
        std::vector<std::int64_t> gen(rho.dim());
        for (std::size_t j = 0; j < rho.dim(); ++j) {
            gen[j] = torus.ambient[j][l];
        }
        const ArcMatrix t = from_cocharacter(gen);
        if (!compose(rho, t).agrees_with(compose(t, rho))) {
            throw NonCommutingTorus("arc does not commute with torus generator " + std::to_string(l + 1));
        }
    }
}

namespace {

template <class Q>
Q min_shifted(const WeightedOrders& w, const std::vector<Q>& xi)
{
    Q best{};
    for (std::size_t i = 0; i < w.orders.size(); ++i) {
        Q v = static_cast<Q>(static_cast<long>(w.orders[i]));
        for (std::size_t c = 0; c < xi.size(); ++c) {
            v += static_cast<Q>(static_cast<long>(w.weights[i][c])) * xi[c];
        }
        if (i == 0 || v < best) {
            best = v;
        }
    }
    return best;
}

template <class Q>
Q twisted_weight_impl(const ArcMatrix& rho, const std::vector<Q>& xi, const Pair& p, const TorusData& torus,
                      int wp)
{
    check_commutes(rho, torus);
    if (xi.size() != torus.rank) {
        throw DimensionMismatch("twist of length " + std::to_string(xi.size()) + " for a rank " +
                                std::to_string(torus.rank) + " torus");
    }
    const auto a = detail::weighted_orders(act(rho, p.v(), wp), basis_weights(p.V(), torus));
    const auto b = detail::weighted_orders(act(rho, p.w(), wp), basis_weights(p.W(), torus));
    return min_shifted(b, xi) - min_shifted(a, xi);
}

} // namespace

Rational twisted_weight(const ArcMatrix& rho, const std::vector<Rational>& xi, const Pair& p, const TorusData& torus,
                        int working_precision)
{
    return twisted_weight_impl(rho, xi, p, torus, working_precision);
}

double twisted_weight(const ArcMatrix& rho, const std::vector<double>& xi, const Pair& p, const TorusData& torus,
                      int working_precision)
{
    return twisted_weight_impl(rho, xi, p, torus, working_precision);
}

Rational epsilon_from_k(std::int64_t k)
{
    if (k < 1) {
        throw InvalidArgument("k must be at least 1");
    }
    return Rational(1, static_cast<unsigned long>(k + 1));
}

namespace {

template <class F>
std::vector<ArcRecord> map_arcs(const std::vector<NamedArc>& arcs, F&& fn)
{
    std::vector<std::future<ArcRecord>> jobs;
    jobs.reserve(arcs.size());
    for (const auto& a : arcs) {
        jobs.push_back(std::async(std::launch::async, [&fn, &a] { return fn(a); }));
    }
    std::vector<ArcRecord> out;
    out.reserve(arcs.size());
    // get() rethrows the first failure in input order.
    for (auto& j : jobs) {
        out.push_back(j.get());
    }
    return out;
}

ArcRecord base_record(const NamedArc& a, const Pair& p, int wp)
{
    ArcRecord r;
    r.arc = a.name;
    const auto d = weight_details(a.arc, p, wp);
    r.weight = d.nu;
    r.m_v = d.m_v;
    r.m_w = d.m_w;
    r.lhs = Rational(static_cast<long>(d.nu));
    return r;
}

} // namespace

void finalize_verdict(StabilityReport& report)
{
    report.violation = false;
    report.destabilizer.reset();
    for (std::size_t i = 0; i < report.records.size(); ++i) {
        auto& r = report.records[i];
        r.violation = r.lhs < r.rhs;
        if (r.violation && !report.destabilizer) {
            report.destabilizer = i;
        }
    }
    report.violation = report.destabilizer.has_value();
    report.verdict = report.violation ? kDestabilizer : kNoViolation;
}

StabilityReport check_semistable(const Pair& p, const std::vector<NamedArc>& arcs, int working_precision)
{
    StabilityReport rep;
    rep.kind = CheckKind::semistable;
    rep.records = map_arcs(arcs, [&](const NamedArc& a) { return base_record(a, p, working_precision); });
    finalize_verdict(rep);
    return rep;
}

StabilityReport check_stable(const Pair& p, const std::vector<NamedArc>& arcs, const Rational& epsilon,
                             SlotOrder order, int working_precision)
{
    StabilityReport rep;
    rep.kind = CheckKind::stable;
    rep.epsilon = epsilon;
    rep.order = order;
    rep.records = map_arcs(arcs, [&](const NamedArc& a) {
        ArcRecord r = base_record(a, p, working_precision);
        r.norm = norm(a.arc, p, order, working_precision);
        r.rhs = epsilon * Rational(static_cast<long>(*r.norm));
        return r;
    });
    finalize_verdict(rep);
    return rep;
}

StabilityReport check_polystable(const Pair& p, const std::vector<NamedArc>& arcs, const Rational& epsilon,
                                 const TorusData& torus, bool override_proper, int working_precision)
{
    StabilityReport rep;
    rep.kind = CheckKind::polystable;
    rep.epsilon = epsilon;
    rep.override_proper = override_proper;
    rep.records = map_arcs(arcs, [&](const NamedArc& a) {
        ArcRecord r = base_record(a, p, working_precision);
        r.norm = norm(a.arc, p, SlotOrder::analytic, working_precision);
        check_commutes(a.arc, torus);
        const NormData d = norm_data(a.arc, p, torus, working_precision);
        const Properness pr = is_proper(d);
        if (!pr.proper && !override_proper) {
            std::string dir;
            for (const auto& x : pr.witness) {
                dir += (dir.empty() ? "" : ", ") + to_fraction_string(x);
            }
            throw NotProper("norm functional of arc '" + a.name + "' is not proper: recession <= 0 along (" +
                            dir + ")");
        }
        r.reduced = reduced_norm(d);
        r.rhs = epsilon * r.reduced->value;
        return r;
    });
    finalize_verdict(rep);
    return rep;
}

} // namespace arcstab
