#include "arcstab/arc_matrix.hpp"

#include <algorithm>
#include <cstdlib>

#include "arcstab/errors.hpp"

namespace arcstab {

namespace {

// Fraction-free elimination of the leading m columns of an m x cols matrix
// stored row-major. Row swaps pick, in each column, the entry of minimal
// valuation (smallest row on ties). Returns the sign of the row permutation.
struct ExactlySingular {};

int bareiss_forward(std::vector<LaurentSeries>& M, std::size_t m, std::size_t cols, int wp)
{
    auto at = [&](std::size_t i, std::size_t j) -> LaurentSeries& { return M[i * cols + j]; };
    int sign = 1;
    LaurentSeries prev = LaurentSeries::one();
    for (std::size_t k = 0; k < m; ++k) {
        std::size_t pivot = m;
        bool saw_placeholder = false;
        for (std::size_t r = k; r < m; ++r) {
            const LaurentSeries& e = at(r, k);
            if (e.is_placeholder()) {
                saw_placeholder = true;
            } else if (e.is_normal() && (pivot == m || e.lead() < at(pivot, k).lead())) {
                pivot = r;
            }
        }
        if (pivot == m) {
            if (!saw_placeholder) {
                throw ExactlySingular{};
            }
            throw SingularMatrix("determinant is zero to known precision");
        }
        if (pivot != k) {
            for (std::size_t j = 0; j < cols; ++j) {
                std::swap(at(k, j), at(pivot, j));
            }
            sign = -sign;
        }
        const LaurentSeries pkk = at(k, k);
        for (std::size_t i = k + 1; i < m; ++i) {
            const LaurentSeries lik = at(i, k);
            for (std::size_t j = k + 1; j < cols; ++j) {
                at(i, j) = divide(pkk * at(i, j) - lik * at(k, j), prev, wp);
            }
            at(i, k) = LaurentSeries{};
        }
        prev = pkk;
    }
    return sign;
}

} // namespace

ArcMatrix::ArcMatrix(std::vector<std::vector<LaurentSeries>> rows, int working_precision)
{
    m_ = rows.size();
    if (m_ == 0) {
        throw DimensionMismatch("an arc needs dimension at least 1");
    }
    entries_.reserve(m_ * m_);
    for (auto& row : rows) {
        if (row.size() != m_) {
            throw DimensionMismatch("arc matrix must be square: row of length " + std::to_string(row.size()) +
                                    " in a " + std::to_string(m_) + "-row matrix");
        }
        for (auto& e : row) {
            entries_.push_back(std::move(e));
        }
    }
    if (determinant(*this, working_precision).is_exact_zero()) {
        throw SingularMatrix("determinant is zero");
    }
}

ArcMatrix ArcMatrix::unchecked(std::size_t m, std::vector<LaurentSeries> entries)
{
    if (entries.size() != m * m) {
        throw DimensionMismatch("entry count does not match dimension");
    }
    return ArcMatrix(m, std::move(entries));
}

ArcMatrix ArcMatrix::identity(std::size_t m)
{
    return scalar(m, 0);
}

ArcMatrix ArcMatrix::scalar(std::size_t m, std::int64_t c)
{
    std::vector<LaurentSeries> e(m * m);
    for (std::size_t i = 0; i < m; ++i) {
        e[i * m + i] = LaurentSeries::monomial(GaussianRational(1), c);
    }
    return ArcMatrix(m, std::move(e));
}

std::vector<std::vector<LaurentSeries>> ArcMatrix::rows() const
{
    std::vector<std::vector<LaurentSeries>> out(m_);
    for (std::size_t i = 0; i < m_; ++i) {
        out[i].assign(entries_.begin() + static_cast<std::ptrdiff_t>(i * m_),
                      entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * m_));
    }
    return out;
}

bool ArcMatrix::is_exact() const
{
    return std::all_of(entries_.begin(), entries_.end(), [](const LaurentSeries& s) { return s.is_exact(); });
}

bool ArcMatrix::is_integral() const
{
    for (const auto& e : entries_) {
        if (e.is_exact_zero()) {
            continue;
        }
        if (e.is_placeholder()) {
            if (e.lead() < 0) {
                throw PrecisionExhausted("integrality undecidable for entry " + e.to_string());
            }
            continue;
        }
        if (e.lead() < 0) {
            return false;
        }
    }
    return true;
}

bool ArcMatrix::agrees_with(const ArcMatrix& o) const
{
    if (m_ != o.m_) {
        return false;
    }
    for (std::size_t k = 0; k < entries_.size(); ++k) {
        if (!entries_[k].agrees_with(o.entries_[k])) {
            return false;
        }
    }
    return true;
}

std::string ArcMatrix::to_string() const
{
    std::string out = "[";
    for (std::size_t i = 0; i < m_; ++i) {
        out += i ? ", [" : "[";
        for (std::size_t j = 0; j < m_; ++j) {
            out += (j ? ", " : "") + (*this)(i, j).to_string();
        }
        out += "]";
    }
    return out + "]";
}

ArcMatrix compose(const ArcMatrix& a, const ArcMatrix& b)
{
    if (a.dim() != b.dim()) {
        throw DimensionMismatch("cannot compose arcs of dimension " + std::to_string(a.dim()) + " and " +
                                std::to_string(b.dim()));
    }
    const std::size_t m = a.dim();
    std::vector<LaurentSeries> out(m * m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t l = 0; l < m; ++l) {
            const LaurentSeries& ail = a(i, l);
            if (ail.is_exact_zero()) {
                continue;
            }
            for (std::size_t j = 0; j < m; ++j) {
                if (!b(l, j).is_exact_zero()) {
                    out[i * m + j] += ail * b(l, j);
                }
            }
        }
    }
    return ArcMatrix::unchecked(m, std::move(out));
}

int elimination_precision(const ArcMatrix& a, int requested)
{
    std::int64_t min_lead = 0;
    for (const auto& e : a.entries()) {
        if (e.is_normal()) {
            min_lead = std::min(min_lead, e.lead());
        }
    }
    const std::int64_t widened = 16 + std::llabs(min_lead) * static_cast<std::int64_t>(a.dim());
    return static_cast<int>(std::max<std::int64_t>(requested, widened));
}

LaurentSeries determinant(const ArcMatrix& a, int working_precision)
{
    const std::size_t m = a.dim();
    std::vector<LaurentSeries> M(a.entries().begin(), a.entries().end());
    int sign = 0;
    try {
        sign = bareiss_forward(M, m, m, elimination_precision(a, working_precision));
    } catch (const ExactlySingular&) {
        return LaurentSeries::zero();
    }
    const LaurentSeries& last = M[m * m - 1];
    return sign > 0 ? last : -last;
}

ArcMatrix inverse(const ArcMatrix& a, int working_precision)
{
    const std::size_t m = a.dim();
    const std::size_t cols = 2 * m;
    const int wp = elimination_precision(a, working_precision);
    std::vector<LaurentSeries> M(m * cols);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            M[i * cols + j] = a(i, j);
        }
        M[i * cols + m + i] = LaurentSeries::one();
    }
    try {
        bareiss_forward(M, m, cols, wp);
    } catch (const ExactlySingular&) {
        throw SingularMatrix("matrix is singular over the Laurent field");
    }
    auto at = [&](std::size_t i, std::size_t j) -> const LaurentSeries& { return M[i * cols + j]; };

    // Determinant of the row-permuted matrix; the right-hand side was
    // permuted alongside, so the solution is still a^{-1}.
    const LaurentSeries d = at(m - 1, m - 1);
    if (d.is_placeholder()) {
        throw SingularMatrix("determinant is zero to known precision");
    }
    std::vector<LaurentSeries> out(m * m);
    for (std::size_t c = 0; c < m; ++c) {
        // y = d * x solves the triangular system in the ring.
        std::vector<LaurentSeries> y(m);
        y[m - 1] = at(m - 1, m + c);
        for (std::size_t ii = m - 1; ii-- > 0;) {
            LaurentSeries acc = d * at(ii, m + c);
            for (std::size_t j = ii + 1; j < m; ++j) {
                if (!at(ii, j).is_exact_zero() && !y[j].is_exact_zero()) {
                    acc -= at(ii, j) * y[j];
                }
            }
            y[ii] = divide(acc, at(ii, ii), wp);
        }
        for (std::size_t r = 0; r < m; ++r) {
            out[r * m + c] = divide(y[r], d, wp);
        }
    }
    return ArcMatrix::unchecked(m, std::move(out));
}

ArcMatrix from_cocharacter(std::span<const std::int64_t> weights)
{
    const std::size_t m = weights.size();
    if (m == 0) {
        throw DimensionMismatch("cocharacter must have at least one weight");
    }
    std::vector<LaurentSeries> e(m * m);
    for (std::size_t i = 0; i < m; ++i) {
        e[i * m + i] = LaurentSeries::monomial(GaussianRational(1), weights[i]);
    }
    return ArcMatrix::unchecked(m, std::move(e));
}

std::int64_t min_entry_ord(const ArcMatrix& a)
{
    bool found = false;
    std::int64_t best = 0;
    for (const auto& e : a.entries()) {
        if (e.is_normal()) {
            if (!found || e.lead() < best) {
                best = e.lead();
            }
            found = true;
        }
    }
    for (const auto& e : a.entries()) {
        if (e.is_placeholder() && (!found || e.lead() < best)) {
            throw PrecisionExhausted("minimum entry order undecidable: entry " + e.to_string() +
                                     " may vanish to lower order");
        }
    }
    if (!found) {
        throw InvalidArgument("min_entry_ord of a matrix without nonzero entries");
    }
    return best;
}

bool is_integral_unit(const ArcMatrix& a, int working_precision)
{
    return a.is_integral() && inverse(a, working_precision).is_integral();
}

bool is_equivalent(const ArcMatrix& a, const ArcMatrix& b, EquivalenceConvention convention,
                   int working_precision)
{
    if (a.dim() != b.dim()) {
        throw DimensionMismatch("equivalence test needs arcs of equal dimension");
    }
    if (convention == EquivalenceConvention::left_quotient) {
        const ArcMatrix u = compose(b, inverse(a, working_precision));
        const ArcMatrix u_inv = compose(a, inverse(b, working_precision));
        return u.is_integral() && u_inv.is_integral();
    }
    const ArcMatrix u = compose(a, b);
    const ArcMatrix u_inv = compose(inverse(b, working_precision), inverse(a, working_precision));
    return u.is_integral() && u_inv.is_integral();
}

} // namespace arcstab
