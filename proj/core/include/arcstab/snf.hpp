#pragma once

#include <cstdint>
#include <vector>

#include "arcstab/arc_matrix.hpp"

namespace arcstab {

/// input = U * diag(z^exponents) * Uprime with U, Uprime in GL(m, C[[z]]).
struct SnfDecomposition {
    ArcMatrix U;
    std::vector<std::int64_t> exponents; // nondecreasing
    ArcMatrix Uprime;
};

/// Smith normal form over the valuation ring C[[z]] (the Cartan-Iwahori
/// decomposition of an arc). Pivots are entries of minimal valuation, ties
/// broken by smallest (row, column). Throws PrecisionExhausted when a
/// placeholder entry could undercut the pivot valuation and SingularMatrix
/// when the remaining block vanishes exactly.
SnfDecomposition snf(const ArcMatrix& a, int working_precision = kDefaultPrecision);

/// U * diag(z^exponents) * Uprime
ArcMatrix reconstruct(const SnfDecomposition& d);

} // namespace arcstab
