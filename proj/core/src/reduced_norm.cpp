#include <algorithm>

#include "arcstab/action.hpp"
#include "arcstab/errors.hpp"
#include "arcstab/exact_lp.hpp"
#include "arcstab/stability.hpp"
#include "stability_impl.hpp"

namespace arcstab {

NormData norm_data(const ArcMatrix& rho, const Pair& p, const TorusData& torus, int working_precision)
{
    check_commutes(rho, torus);
    NormData d;
    d.degV = p.degV();
    d.rank = torus.rank;
    const std::size_t m = rho.dim();
    std::vector<LaurentSeries> entries(rho.entries().begin(), rho.entries().end());
    std::vector<WeightVector> entry_weights;
    entry_weights.reserve(m * m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            entry_weights.push_back(torus.ambient[i]);
        }
    }
    d.entries = detail::weighted_orders(entries, entry_weights);
    d.coords = detail::weighted_orders(act(rho, p.v(), working_precision), basis_weights(p.V(), torus));
    return d;
}

namespace {

template <class Q>
Q lin(std::int64_t order, const WeightVector& w, const std::vector<Q>& xi)
{
    Q v = static_cast<Q>(static_cast<long>(order));
    for (std::size_t c = 0; c < xi.size(); ++c) {
        v += static_cast<Q>(static_cast<long>(w[c])) * xi[c];
    }
    return v;
}

template <class Q>
Q twisted_norm_impl(const NormData& d, const std::vector<Q>& xi)
{
    if (xi.size() != d.rank) {
        throw DimensionMismatch("twist has the wrong rank");
    }
    // max(-x) = -min(x)
    Q min_e{};
    for (std::size_t j = 0; j < d.entries.orders.size(); ++j) {
        Q v = lin(d.entries.orders[j], d.entries.weights[j], xi);
        if (j == 0 || v < min_e) {
            min_e = v;
        }
    }
    Q min_a{};
    for (std::size_t i = 0; i < d.coords.orders.size(); ++i) {
        Q v = lin(d.coords.orders[i], d.coords.weights[i], xi);
        if (i == 0 || v < min_a) {
            min_a = v;
        }
    }
    return -static_cast<Q>(static_cast<long>(d.degV)) * min_e + min_a;
}

Rational rat(std::int64_t x)
{
    return Rational(static_cast<long>(x));
}

} // namespace

Rational twisted_norm(const NormData& d, const std::vector<Rational>& xi)
{
    return twisted_norm_impl(d, xi);
}

double twisted_norm(const NormData& d, const std::vector<double>& xi)
{
    return twisted_norm_impl(d, xi);
}

ReducedNorm reduced_norm(const NormData& d)
{
    const std::size_t r = d.rank;
    const std::size_t n = r + 1; // xi, then t
    std::optional<ReducedNorm> best;
    for (std::size_t i = 0; i < d.coords.orders.size(); ++i) {
        const auto& lam_i = d.coords.weights[i];
        LinearProgram lp(n);
        for (std::size_t c = 0; c < r; ++c) {
            lp.objective[c] = rat(lam_i[c]);
        }
        lp.objective[r] = rat(d.degV);
        // t >= -ord e_j - <mu_j, xi>
        for (std::size_t j = 0; j < d.entries.orders.size(); ++j) {
            std::vector<Rational> row(n);
            for (std::size_t c = 0; c < r; ++c) {
                row[c] = -rat(d.entries.weights[j][c]);
            }
            row[r] = -1;
            lp.add_le(std::move(row), rat(d.entries.orders[j]));
        }
        // piece i attains the subtracted maximum (closed cells)
        for (std::size_t k = 0; k < d.coords.orders.size(); ++k) {
            if (k == i) {
                continue;
            }
            std::vector<Rational> row(n);
            for (std::size_t c = 0; c < r; ++c) {
                row[c] = rat(lam_i[c] - d.coords.weights[k][c]);
            }
            lp.add_le(std::move(row), rat(d.coords.orders[k] - d.coords.orders[i]));
        }
        const LpResult res = solve(lp);
        if (res.status == LpStatus::infeasible) {
            continue;
        }
        if (res.status == LpStatus::unbounded) {
            std::string dir;
            for (std::size_t c = 0; c < r; ++c) {
                dir += (c ? ", " : "") + to_fraction_string(res.ray[c]);
            }
            throw NotProper("reduced norm is unbounded below along (" + dir + ")");
        }
        const Rational value = res.value + rat(d.coords.orders[i]);
        if (!best || value < best->value) {
            best = ReducedNorm{value, std::vector<Rational>(res.x.begin(), res.x.begin() + static_cast<std::ptrdiff_t>(r)),
                               true, true};
        }
    }
    if (!best) {
        throw InvalidArgument("reduced norm: no linear piece is feasible");
    }
    best->proper = is_proper(d).proper;
    return *best;
}

ReducedNorm reduced_norm(const ArcMatrix& rho, const Pair& p, const TorusData& torus, int working_precision)
{
    return reduced_norm(norm_data(rho, p, torus, working_precision));
}

Properness is_proper(const NormData& d)
{
    const std::size_t r = d.rank;
    if (r == 0) {
        return {};
    }
    for (std::size_t i = 0; i < d.coords.orders.size(); ++i) {
        const auto& lam_i = d.coords.weights[i];
        for (std::size_t axis = 0; axis < r; ++axis) {
            for (int sign : {1, -1}) {
                // eta with <lambda_i - degV mu_j, eta> <= 0 for all j,
                // eta_axis = sign, |eta_c| <= 1.
                LinearProgram lp(r);
                for (std::size_t j = 0; j < d.entries.orders.size(); ++j) {
                    std::vector<Rational> row(r);
                    for (std::size_t c = 0; c < r; ++c) {
                        row[c] = rat(lam_i[c] - d.degV * d.entries.weights[j][c]);
                    }
                    lp.add_le(std::move(row), Rational(0));
                }
                for (std::size_t c = 0; c < r; ++c) {
                    std::vector<Rational> row(r);
                    row[c] = 1;
                    if (c == axis) {
                        lp.add_eq(row, Rational(sign));
                        continue;
                    }
                    lp.add_le(row, Rational(1));
                    row[c] = -1;
                    lp.add_le(std::move(row), Rational(1));
                }
                const LpResult res = solve(lp);
                if (res.status != LpStatus::infeasible) {
                    return Properness{false, res.x};
                }
            }
        }
    }
    return {};
}

Properness is_proper(const ArcMatrix& rho, const Pair& p, const TorusData& torus, int working_precision)
{
    return is_proper(norm_data(rho, p, torus, working_precision));
}

} // namespace arcstab
