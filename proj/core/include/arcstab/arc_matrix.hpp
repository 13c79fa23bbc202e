#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "arcstab/laurent_series.hpp"

namespace arcstab {

/// Square matrix over the Laurent series field. As an arc it is a point of
/// GL(m) over C((z)); the public constructor checks invertibility.
class ArcMatrix {
public:
    /// Validates that the rows form a square matrix with a determinant of
    /// finite valuation. Throws DimensionMismatch or SingularMatrix.
    explicit ArcMatrix(std::vector<std::vector<LaurentSeries>> rows,
                       int working_precision = kDefaultPrecision);

    /// No invertibility check; for intermediate results of exact operations
    /// that are known to be invertible or that are not used as arcs.
    static ArcMatrix unchecked(std::size_t m, std::vector<LaurentSeries> entries);

    static ArcMatrix identity(std::size_t m);
    /// z^c * identity
    static ArcMatrix scalar(std::size_t m, std::int64_t c);

    std::size_t dim() const { return m_; }
    const LaurentSeries& operator()(std::size_t i, std::size_t j) const { return entries_[i * m_ + j]; }
    std::span<const LaurentSeries> entries() const { return entries_; }

    std::vector<std::vector<LaurentSeries>> rows() const;

    /// True when every entry is a Laurent polynomial.
    bool is_exact() const;

    /// Entry valuations all >= 0 (membership in the matrix ring over C[[z]]).
    /// Throws PrecisionExhausted if a placeholder entry makes it undecidable.
    bool is_integral() const;

    bool agrees_with(const ArcMatrix& o) const;
    friend bool operator==(const ArcMatrix& a, const ArcMatrix& b) = default;

    std::string to_string() const;

private:
    ArcMatrix(std::size_t m, std::vector<LaurentSeries> entries) : m_(m), entries_(std::move(entries)) {}

    std::size_t m_ = 0;
    std::vector<LaurentSeries> entries_;
};

/// Matrix product a * b.
ArcMatrix compose(const ArcMatrix& a, const ArcMatrix& b);

/// Determinant by fraction-free (Bareiss) elimination with valuation pivoting.
/// Exact zero for a singular matrix; SingularMatrix if no pivot can be
/// certified because the candidates are all O(z^n) placeholders.
LaurentSeries determinant(const ArcMatrix& a, int working_precision = kDefaultPrecision);

/// Relative precision used for elimination on `a`: at least
/// 16 + |min entry order| * m, and at least `requested`.
int elimination_precision(const ArcMatrix& a, int requested = kDefaultPrecision);

/// Inverse via fraction-free Gauss elimination of [a | I] followed by
/// fraction-free back substitution; the only non-ring division is by the
/// determinant. Throws SingularMatrix if the determinant is zero to known
/// precision.
ArcMatrix inverse(const ArcMatrix& a, int working_precision = kDefaultPrecision);

/// diag(z^w_1, ..., z^w_m)
ArcMatrix from_cocharacter(std::span<const std::int64_t> weights);

/// Minimum order over the nonzero entries. Throws PrecisionExhausted if a
/// placeholder entry could undercut the minimum, InvalidArgument on the zero
/// matrix.
std::int64_t min_entry_ord(const ArcMatrix& a);

enum class EquivalenceConvention {
    left_quotient, // b * a^{-1} integral with integral inverse
    literal_product, // a * b integral with integral inverse
};

/// Equivalence of arcs modulo the valuation-ring group.
bool is_equivalent(const ArcMatrix& a, const ArcMatrix& b,
                   EquivalenceConvention convention = EquivalenceConvention::left_quotient,
                   int working_precision = kDefaultPrecision);

/// Membership in GL(m) over C[[z]]: integral with integral inverse.
bool is_integral_unit(const ArcMatrix& a, int working_precision = kDefaultPrecision);

} // namespace arcstab
