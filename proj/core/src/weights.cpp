#include "arcstab/weights.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "arcstab/errors.hpp"
#include "arcstab/exact_lp.hpp"

namespace arcstab {

TorusData TorusData::trivial(std::size_t m)
{
    return TorusData{0, std::vector<WeightVector>(m)};
}

TorusData TorusData::diagonal(std::size_t m)
{
    TorusData t{m, std::vector<WeightVector>(m, WeightVector(m, 0))};
    for (std::size_t j = 0; j < m; ++j) {
        t.ambient[j][j] = 1;
    }
    return t;
}

void TorusData::validate(std::size_t m) const
{
    if (ambient.size() != m) {
        throw InvalidArgument("torus needs " + std::to_string(m) + " ambient weights, got " +
                              std::to_string(ambient.size()));
    }
    for (const auto& w : ambient) {
        if (w.size() != rank) {
            throw InvalidArgument("torus weight of length " + std::to_string(w.size()) + " for rank " +
                                  std::to_string(rank));
        }
    }
}

std::int64_t pairing(const WeightVector& a, const WeightVector& b)
{
    std::int64_t s = 0;
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
        s += a[i] * b[i];
    }
    return s;
}

namespace {

void add_into(WeightVector& acc, const WeightVector& w, std::int64_t times = 1)
{
    for (std::size_t i = 0; i < acc.size(); ++i) {
        acc[i] += times * w[i];
    }
}

} // namespace

std::vector<WeightVector> basis_weights(const RepExpr& rep, const TorusData& torus)
{
    const std::size_t r = torus.rank;
    if (rep.ambient()) {
        torus.validate(*rep.ambient());
    }
    std::vector<WeightVector> out;
    switch (rep.kind()) {
    case RepExpr::Kind::standard:
        out = torus.ambient;
        break;
    case RepExpr::Kind::trivial:
        out.emplace_back(r, 0);
        break;
    case RepExpr::Kind::matrix: {
        const std::size_t m = rep.parameter();
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = 0; j < m; ++j) {
                out.push_back(torus.ambient[i]);
            }
        }
        break;
    }
    case RepExpr::Kind::sym: {
        const auto child = basis_weights(rep.child(), torus);
        for (const auto& alpha : sym_exponents(child.size(), rep.parameter())) {
            WeightVector w(r, 0);
            for (std::size_t i = 0; i < alpha.size(); ++i) {
                if (alpha[i] != 0) {
                    add_into(w, child[i], alpha[i]);
                }
            }
            out.push_back(std::move(w));
        }
        break;
    }
    case RepExpr::Kind::dual:
        out = basis_weights(rep.child(), torus);
        for (auto& w : out) {
            for (auto& x : w) {
                x = -x;
            }
        }
        break;
    case RepExpr::Kind::tensor: {
        const auto l = basis_weights(rep.left(), torus);
        const auto rr = basis_weights(rep.right(), torus);
        out.reserve(l.size() * rr.size());
        for (const auto& a : l) {
            for (const auto& b : rr) {
                WeightVector w = a;
                add_into(w, b);
                out.push_back(std::move(w));
            }
        }
        break;
    }
    case RepExpr::Kind::direct_sum:
        out = basis_weights(rep.left(), torus);
        for (auto& w : basis_weights(rep.right(), torus)) {
            out.push_back(std::move(w));
        }
        break;
    }
    return out;
}

WeightTable weight_table(const RepExpr& rep, const TorusData& torus)
{
    WeightTable t;
    t.rank = torus.rank;
    t.basis_weights = basis_weights(rep, torus);
    std::map<WeightVector, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < t.basis_weights.size(); ++i) {
        groups[t.basis_weights[i]].push_back(i);
    }
    for (auto& [w, idx] : groups) {
        t.groups.emplace_back(w, std::move(idx));
    }
    return t;
}

Degree deg(const RepExpr& rep, bool allow_shift)
{
    const std::size_t m = rep.ambient().value_or(1);
    const auto weights = basis_weights(rep, TorusData::diagonal(m));
    std::int64_t lowest = 0;
    for (const auto& w : weights) {
        for (auto x : w) {
            lowest = std::min(lowest, x);
        }
    }
    Degree d;
    if (lowest < 0) {
        if (!allow_shift) {
            throw UnnormalizableWeights(rep.to_string() + " has a negative weight coordinate " +
                                        std::to_string(lowest));
        }
        d.det_shift = -lowest;
    }
    for (const auto& w : weights) {
        const std::int64_t s = std::accumulate(w.begin(), w.end(), std::int64_t{0}) +
                               d.det_shift * static_cast<std::int64_t>(m);
        d.degree = std::max(d.degree, s);
    }
    return d;
}

std::vector<std::vector<Rational>> hull_vertices(const std::vector<std::vector<Rational>>& points)
{
    std::vector<std::vector<Rational>> pts = points;
    std::sort(pts.begin(), pts.end(), [](const auto& a, const auto& b) {
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() <= 1) {
        return pts;
    }
    const std::size_t r = pts.front().size();
    std::vector<std::vector<Rational>> out;
    for (std::size_t p = 0; p < pts.size(); ++p) {
        // p is a vertex iff it is not a convex combination of the others.
        const std::size_t n = pts.size() - 1;
        LinearProgram lp(n);
        lp.nonnegative.assign(n, true);
        for (std::size_t c = 0; c < r; ++c) {
            std::vector<Rational> row;
            row.reserve(n);
            for (std::size_t q = 0; q < pts.size(); ++q) {
                if (q != p) {
                    row.push_back(pts[q][c]);
                }
            }
            lp.add_eq(std::move(row), pts[p][c]);
        }
        lp.add_eq(std::vector<Rational>(n, Rational(1)), Rational(1));
        if (solve(lp).status == LpStatus::infeasible) {
            out.push_back(pts[p]);
        }
    }
    return out;
}

std::vector<std::vector<Rational>> weight_polytope(const RepExpr& rep, const TorusData& torus)
{
    if (torus.rank > 4) {
        throw RankTooLarge("weight polytope is limited to torus rank 4, got " + std::to_string(torus.rank));
    }
    std::vector<std::vector<Rational>> pts;
    for (const auto& w : basis_weights(rep, torus)) {
        std::vector<Rational> p;
        for (auto x : w) {
            p.emplace_back(static_cast<long>(x));
        }
        pts.push_back(std::move(p));
    }
    return hull_vertices(pts);
}

} // namespace arcstab
