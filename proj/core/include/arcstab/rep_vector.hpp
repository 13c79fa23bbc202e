#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "arcstab/gaussian_rational.hpp"
#include "arcstab/representation.hpp"

namespace arcstab {

/// Exact vector in the canonical basis of a representation, stored sparsely.
class RepVector {
public:
    using Coords = std::map<std::size_t, GaussianRational>;

    /// Zero entries are dropped; indices must be below rep.dim().
    RepVector(RepExpr rep, Coords coords);

    static RepVector basis(const RepExpr& rep, std::size_t index);

    /// Build from basis names (or "#i" keys) mapped to Gaussian rational
    /// literals. Repeated names accumulate.
    static RepVector from_named(const RepExpr& rep, const std::vector<std::pair<std::string, std::string>>& entries);

    const RepExpr& rep() const { return rep_; }
    const Coords& coords() const { return coords_; }
    bool is_zero() const { return coords_.empty(); }
    std::size_t dim() const { return dim_; }

    /// Dense coordinates of length dim().
    std::vector<GaussianRational> dense() const;

    /// Canonical {name: value} listing in basis order.
    std::vector<std::pair<std::string, std::string>> named() const;

    friend bool operator==(const RepVector& a, const RepVector& b)
    {
        return a.rep_ == b.rep_ && a.coords_ == b.coords_;
    }

private:
    RepExpr rep_;
    std::size_t dim_;
    Coords coords_;
};

/// v (x) w in rep(v) (x) rep(w).
RepVector tensor(const RepVector& v, const RepVector& w);

/// v^{(x) k} in rep(v)^{(x) k}; k >= 1.
RepVector tensor_power(const RepVector& v, std::size_t k, std::size_t cap = kDefaultDimensionCap);

/// The identity matrix as a vector of mat(m).
RepVector identity_element(std::size_t m);

/// Image of v under a constant invertible change of coordinates c (dense
/// dim x dim, row-major): coordinates become c * coords.
RepVector transform(const RepVector& v, const std::vector<GaussianRational>& c);

} // namespace arcstab
