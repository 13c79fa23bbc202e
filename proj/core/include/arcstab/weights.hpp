#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "arcstab/gaussian_rational.hpp"
#include "arcstab/representation.hpp"

namespace arcstab {

using WeightVector = std::vector<std::int64_t>;

/// A torus acting diagonally on std(m): basis vector e_j has weight
/// ambient[j] in Z^rank.
struct TorusData {
    std::size_t rank = 0;
    std::vector<WeightVector> ambient;

    /// Rank-0 torus on std(m).
    static TorusData trivial(std::size_t m);
    /// The maximal diagonal torus of GL(m): e_j has weight the j-th unit vector.
    static TorusData diagonal(std::size_t m);
    /// Throws InvalidArgument if the weight vectors do not all have length rank.
    void validate(std::size_t m) const;
};

/// Weights of the canonical basis of a representation, grouped by value.
struct WeightTable {
    std::size_t rank = 0;
    std::vector<WeightVector> basis_weights; // indexed like the canonical basis
    /// Distinct weights in ascending lexicographic order, with the basis
    /// indices of each; the index lists partition the basis.
    std::vector<std::pair<WeightVector, std::vector<std::size_t>>> groups;
};

/// std gets the ambient weights, mat(m) gives E_ij the weight of e_i (left
/// multiplication), sym sums, dual negates, tensor adds, direct sum
/// juxtaposes, triv is 0.
WeightTable weight_table(const RepExpr& rep, const TorusData& torus);

/// Per-basis weights only; cheaper than weight_table for large reps.
std::vector<WeightVector> basis_weights(const RepExpr& rep, const TorusData& torus);

struct Degree {
    std::int64_t degree = 1;
    /// Power of the determinant character tensored in to make every weight
    /// of the diagonal torus nonnegative.
    std::int64_t det_shift = 0;
};

/// Smallest d >= 1 such that every weight of the diagonal torus of GL(m)
/// lies in d * simplex = {x >= 0, sum x <= d}, after the determinant shift.
/// With allow_shift = false a negative coordinate raises
/// UnnormalizableWeights instead.
Degree deg(const RepExpr& rep, bool allow_shift = true);

/// Vertices of the convex hull of the weights occurring in rep, sorted
/// lexicographically. Throws RankTooLarge above rank 4.
std::vector<std::vector<Rational>> weight_polytope(const RepExpr& rep, const TorusData& torus);

/// Vertices of the hull of an arbitrary finite point set (same ordering).
std::vector<std::vector<Rational>> hull_vertices(const std::vector<std::vector<Rational>>& points);

/// <a, b> over the integers.
std::int64_t pairing(const WeightVector& a, const WeightVector& b);

} // namespace arcstab
