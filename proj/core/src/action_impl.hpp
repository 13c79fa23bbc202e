#pragma once

#include <cstdint>
#include <iterator>
#include <map>
#include <optional>
#include <vector>

#include "arcstab/errors.hpp"
#include "arcstab/representation.hpp"

namespace arcstab::detail {

// Traits supply: Scalar, Matrix, dim(g), entry(g, i, j), inverse(g),
// is_zero(s), zero(), one().
template <class Traits>
class Actor {
public:
    using S = typename Traits::Scalar;
    using M = typename Traits::Matrix;

    Actor(const M& g, Traits traits) : g_(g), traits_(std::move(traits)) {}
    Actor(const M& g, M inverse, Traits traits) : g_(g), traits_(std::move(traits)), inv_(std::move(inverse)) {}

    std::vector<S> apply(const RepExpr& rep, std::vector<S> x, bool inverted)
    {
        switch (rep.kind()) {
        case RepExpr::Kind::trivial:
            return x;
        case RepExpr::Kind::standard:
            return apply_std(x, inverted);
        case RepExpr::Kind::matrix:
            return apply_mat(x, inverted);
        case RepExpr::Kind::sym:
            return apply_sym(rep, x, inverted);
        case RepExpr::Kind::dual:
            return apply_dual(rep, x, inverted);
        case RepExpr::Kind::tensor:
            return apply_tensor(rep, std::move(x), inverted);
        case RepExpr::Kind::direct_sum:
            return apply_sum(rep, std::move(x), inverted);
        }
        return x;
    }

private:
    const M& group(bool inverted)
    {
        if (!inverted) {
            return g_;
        }
        if (!inv_) {
            inv_ = traits_.inverse(g_);
        }
        return *inv_;
    }

    std::vector<S> basis(std::size_t n, std::size_t i) const
    {
        std::vector<S> e(n, traits_.zero());
        e[i] = traits_.one();
        return e;
    }

    std::vector<S> apply_std(const std::vector<S>& x, bool inverted)
    {
        const M& g = group(inverted);
        const std::size_t m = traits_.dim(g);
        std::vector<S> y(m, traits_.zero());
        for (std::size_t j = 0; j < m; ++j) {
            if (traits_.is_zero(x[j])) {
                continue;
            }
            for (std::size_t i = 0; i < m; ++i) {
                const S& gij = traits_.entry(g, i, j);
                if (!traits_.is_zero(gij)) {
                    y[i] += gij * x[j];
                }
            }
        }
        return y;
    }

    std::vector<S> apply_mat(const std::vector<S>& x, bool inverted)
    {
        const M& g = group(inverted);
        const std::size_t m = traits_.dim(g);
        std::vector<S> y(m * m, traits_.zero());
        for (std::size_t l = 0; l < m; ++l) {
            for (std::size_t j = 0; j < m; ++j) {
                const S& xlj = x[l * m + j];
                if (traits_.is_zero(xlj)) {
                    continue;
                }
                for (std::size_t i = 0; i < m; ++i) {
                    const S& gil = traits_.entry(g, i, l);
                    if (!traits_.is_zero(gil)) {
                        y[i * m + j] += gil * xlj;
                    }
                }
            }
        }
        return y;
    }

    std::vector<S> apply_sym(const RepExpr& rep, const std::vector<S>& x, bool inverted)
    {
        const RepExpr& child = rep.child();
        const std::size_t n = child.dim();
        const std::size_t k = rep.parameter();
        const auto monomials = sym_exponents(n, k);
        std::vector<std::optional<std::vector<S>>> images(n);
        std::vector<S> y(monomials.size(), traits_.zero());
        for (std::size_t idx = 0; idx < monomials.size(); ++idx) {
            if (traits_.is_zero(x[idx])) {
                continue;
            }
            const auto& alpha = monomials[idx];
            std::map<std::vector<std::uint32_t>, S> poly;
            poly.emplace(std::vector<std::uint32_t>(n, 0), x[idx]);
            for (std::size_t j = 0; j < n; ++j) {
                if (alpha[j] == 0) {
                    continue;
                }
                if (!images[j]) {
                    images[j] = apply(child, basis(n, j), inverted);
                }
                const auto& col = *images[j];
                for (std::uint32_t p = 0; p < alpha[j]; ++p) {
                    std::map<std::vector<std::uint32_t>, S> next;
                    for (const auto& [mono, c] : poly) {
                        for (std::size_t i = 0; i < n; ++i) {
                            if (traits_.is_zero(col[i])) {
                                continue;
                            }
                            auto key = mono;
                            ++key[i];
                            auto it = next.find(key);
                            if (it == next.end()) {
                                next.emplace(std::move(key), c * col[i]);
                            } else {
                                it->second += c * col[i];
                            }
                        }
                    }
                    poly = std::move(next);
                }
            }
            for (const auto& [mono, c] : poly) {
                y[sym_index(mono)] += c;
            }
        }
        return y;
    }

    std::vector<S> apply_dual(const RepExpr& rep, const std::vector<S>& x, bool inverted)
    {
        const RepExpr& child = rep.child();
        const std::size_t n = child.dim();
        std::vector<S> y(n, traits_.zero());
        bool any = false;
        for (const auto& xi : x) {
            any = any || !traits_.is_zero(xi);
        }
        if (!any) {
            return y;
        }
        // Column i of rho(g^{-1}) pairs with x to give coordinate i.
        for (std::size_t i = 0; i < n; ++i) {
            const std::vector<S> col = apply(child, basis(n, i), !inverted);
            for (std::size_t j = 0; j < n; ++j) {
                if (!traits_.is_zero(col[j]) && !traits_.is_zero(x[j])) {
                    y[i] += col[j] * x[j];
                }
            }
        }
        return y;
    }

    std::vector<S> apply_tensor(const RepExpr& rep, std::vector<S> x, bool inverted)
    {
        const std::size_t dl = rep.left().dim();
        const std::size_t dr = rep.right().dim();
        for (std::size_t a = 0; a < dl; ++a) {
            bool nonzero = false;
            for (std::size_t b = 0; b < dr; ++b) {
                nonzero = nonzero || !traits_.is_zero(x[a * dr + b]);
            }
            if (!nonzero) {
                continue;
            }
            std::vector<S> row(x.begin() + static_cast<std::ptrdiff_t>(a * dr),
                               x.begin() + static_cast<std::ptrdiff_t>((a + 1) * dr));
            row = apply(rep.right(), std::move(row), inverted);
            for (std::size_t b = 0; b < dr; ++b) {
                x[a * dr + b] = std::move(row[b]);
            }
        }
        for (std::size_t b = 0; b < dr; ++b) {
            std::vector<S> col(dl, traits_.zero());
            bool nonzero = false;
            for (std::size_t a = 0; a < dl; ++a) {
                col[a] = x[a * dr + b];
                nonzero = nonzero || !traits_.is_zero(col[a]);
            }
            if (!nonzero) {
                continue;
            }
            col = apply(rep.left(), std::move(col), inverted);
            for (std::size_t a = 0; a < dl; ++a) {
                x[a * dr + b] = std::move(col[a]);
            }
        }
        return x;
    }

    std::vector<S> apply_sum(const RepExpr& rep, std::vector<S> x, bool inverted)
    {
        const std::size_t dl = rep.left().dim();
        std::vector<S> l(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(dl));
        std::vector<S> r(x.begin() + static_cast<std::ptrdiff_t>(dl), x.end());
        l = apply(rep.left(), std::move(l), inverted);
        r = apply(rep.right(), std::move(r), inverted);
        std::move(r.begin(), r.end(), std::back_inserter(l));
        return l;
    }

    const M& g_;
    Traits traits_;
    std::optional<M> inv_;
};

inline void check_ambient(const RepExpr& rep, std::size_t m, std::size_t coords)
{
    if (rep.ambient() && *rep.ambient() != m) {
        throw DimensionMismatch("group element of size " + std::to_string(m) + " cannot act on " +
                                rep.to_string());
    }
    if (coords != rep.dim()) {
        throw DimensionMismatch("coordinate vector of length " + std::to_string(coords) + " for " +
                                rep.to_string());
    }
}

} // namespace arcstab::detail
