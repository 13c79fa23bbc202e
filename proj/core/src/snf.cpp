#include "arcstab/snf.hpp"

#include <limits>
#include <utility>

#include "arcstab/errors.hpp"

namespace arcstab {

namespace {

class Grid {
public:
    explicit Grid(std::size_t m) : m_(m), e_(m * m) {}
    Grid(std::size_t m, std::span<const LaurentSeries> src) : m_(m), e_(src.begin(), src.end()) {}

    static Grid identity(std::size_t m)
    {
        Grid g(m);
        for (std::size_t i = 0; i < m; ++i) {
            g(i, i) = LaurentSeries::one();
        }
        return g;
    }

    LaurentSeries& operator()(std::size_t i, std::size_t j) { return e_[i * m_ + j]; }
    const LaurentSeries& operator()(std::size_t i, std::size_t j) const { return e_[i * m_ + j]; }

    void swap_rows(std::size_t a, std::size_t b)
    {
        for (std::size_t j = 0; j < m_; ++j) {
            std::swap((*this)(a, j), (*this)(b, j));
        }
    }
    void swap_cols(std::size_t a, std::size_t b)
    {
        for (std::size_t i = 0; i < m_; ++i) {
            std::swap((*this)(i, a), (*this)(i, b));
        }
    }
    // row dst += f * row src
    void add_row(std::size_t dst, std::size_t src, const LaurentSeries& f)
    {
        for (std::size_t j = 0; j < m_; ++j) {
            if (!(*this)(src, j).is_exact_zero()) {
                (*this)(dst, j) += f * (*this)(src, j);
            }
        }
    }
    // col dst += f * col src
    void add_col(std::size_t dst, std::size_t src, const LaurentSeries& f)
    {
        for (std::size_t i = 0; i < m_; ++i) {
            if (!(*this)(i, src).is_exact_zero()) {
                (*this)(i, dst) += (*this)(i, src) * f;
            }
        }
    }

    ArcMatrix release() { return ArcMatrix::unchecked(m_, std::move(e_)); }

private:
    std::size_t m_;
    std::vector<LaurentSeries> e_;
};

} // namespace

SnfDecomposition snf(const ArcMatrix& a, int working_precision)
{
    const std::size_t m = a.dim();
    const int wp = elimination_precision(a, working_precision);
    Grid M(m, a.entries());
    // a = Linv * M * Rinv is maintained throughout.
    Grid Linv = Grid::identity(m);
    Grid Rinv = Grid::identity(m);
    std::vector<std::int64_t> exponents;
    exponents.reserve(m);

    for (std::size_t k = 0; k < m; ++k) {
        std::size_t pr = m;
        std::size_t pc = m;
        std::int64_t low_placeholder = std::numeric_limits<std::int64_t>::max();
        bool saw_placeholder = false;
        for (std::size_t i = k; i < m; ++i) {
            for (std::size_t j = k; j < m; ++j) {
                const LaurentSeries& e = M(i, j);
                if (e.is_placeholder()) {
                    saw_placeholder = true;
                    low_placeholder = std::min(low_placeholder, e.lead());
                } else if (e.is_normal() && (pr == m || e.lead() < M(pr, pc).lead())) {
                    pr = i;
                    pc = j;
                }
            }
        }
        if (pr == m) {
            if (saw_placeholder) {
                throw PrecisionExhausted("Smith form: remaining block is zero to known precision");
            }
            throw SingularMatrix("Smith form of a singular matrix");
        }
        const std::int64_t e = M(pr, pc).lead();
        if (saw_placeholder && low_placeholder < e) {
            throw PrecisionExhausted("Smith form: pivot valuation " + std::to_string(e) +
                                     " cannot be certified against O(z^" + std::to_string(low_placeholder) + ")");
        }
        if (pr != k) {
            M.swap_rows(k, pr);
            Linv.swap_cols(k, pr);
        }
        if (pc != k) {
            M.swap_cols(k, pc);
            Rinv.swap_rows(k, pc);
        }

        // Absorb the unit part of the pivot into the left factor.
        const LaurentSeries unit = M(k, k).shifted(-e);
        if (!(unit.is_exact_monomial() && unit.coeffs()[0] == GaussianRational(1))) {
            const LaurentSeries unit_inv = unit.inverse(wp);
            for (std::size_t j = 0; j < m; ++j) {
                if (!M(k, j).is_exact_zero()) {
                    M(k, j) = unit_inv * M(k, j);
                }
            }
            for (std::size_t i = 0; i < m; ++i) {
                if (!Linv(i, k).is_exact_zero()) {
                    Linv(i, k) = Linv(i, k) * unit;
                }
            }
        }

        for (std::size_t i = k + 1; i < m; ++i) {
            if (M(i, k).is_exact_zero()) {
                continue;
            }
            const LaurentSeries f = M(i, k).shifted(-e);
            M.add_row(i, k, -f);
            M(i, k) = LaurentSeries{};
            Linv.add_col(k, i, f);
        }
        for (std::size_t j = k + 1; j < m; ++j) {
            if (M(k, j).is_exact_zero()) {
                continue;
            }
            const LaurentSeries g = M(k, j).shifted(-e);
            M(k, j) = LaurentSeries{};
            Rinv.add_row(k, j, g);
        }
        M(k, k) = LaurentSeries::monomial(GaussianRational(1), e);
        exponents.push_back(e);
    }
    return SnfDecomposition{Linv.release(), std::move(exponents), Rinv.release()};
}

ArcMatrix reconstruct(const SnfDecomposition& d)
{
    return compose(compose(d.U, from_cocharacter(d.exponents)), d.Uprime);
}

} // namespace arcstab
