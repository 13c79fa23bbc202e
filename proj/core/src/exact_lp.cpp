#include "arcstab/exact_lp.hpp"

#include <optional>

#include "arcstab/errors.hpp"

namespace arcstab {

void LinearProgram::add_le(std::vector<Rational> row, Rational rhs)
{
    if (row.size() != num_vars) {
        throw DimensionMismatch("LP row has the wrong number of coefficients");
    }
    le_rows.push_back(std::move(row));
    le_rhs.push_back(std::move(rhs));
}

void LinearProgram::add_eq(std::vector<Rational> row, Rational rhs)
{
    if (row.size() != num_vars) {
        throw DimensionMismatch("LP row has the wrong number of coefficients");
    }
    eq_rows.push_back(std::move(row));
    eq_rhs.push_back(std::move(rhs));
}

namespace {

using Row = std::vector<Rational>;

class Tableau {
public:
    Tableau(std::vector<Row> rows, std::vector<std::size_t> basis, std::size_t cols)
        : rows_(std::move(rows)), basis_(std::move(basis)), cols_(cols)
    {
    }

    // Reduced-cost row for cost vector c (length cols_); last entry holds
    // minus the objective value.
    void set_objective(const Row& c)
    {
        obj_.assign(cols_ + 1, Rational(0));
        for (std::size_t j = 0; j < cols_; ++j) {
            obj_[j] = c[j];
        }
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const Rational& cb = c[basis_[i]];
            if (sgn(cb) == 0) {
                continue;
            }
            for (std::size_t j = 0; j <= cols_; ++j) {
                obj_[j] -= cb * rows_[i][j];
            }
        }
    }

    // Bland's rule iterations over columns below `allowed`. Returns the
    // unbounded entering column, if any.
    std::optional<std::size_t> run(std::size_t allowed)
    {
        while (true) {
            std::size_t enter = allowed;
            for (std::size_t j = 0; j < allowed; ++j) {
                if (sgn(obj_[j]) < 0) {
                    enter = j;
                    break;
                }
            }
            if (enter == allowed) {
                return std::nullopt;
            }
            std::size_t leave = rows_.size();
            Rational best;
            for (std::size_t i = 0; i < rows_.size(); ++i) {
                if (sgn(rows_[i][enter]) <= 0) {
                    continue;
                }
                Rational ratio = rows_[i][cols_] / rows_[i][enter];
                if (leave == rows_.size() || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave == rows_.size()) {
                return enter;
            }
            pivot(leave, enter);
        }
    }

    void pivot(std::size_t r, std::size_t c)
    {
        const Rational p = rows_[r][c];
        for (auto& x : rows_[r]) {
            x /= p;
        }
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (i == r || sgn(rows_[i][c]) == 0) {
                continue;
            }
            const Rational f = rows_[i][c];
            for (std::size_t j = 0; j <= cols_; ++j) {
                rows_[i][j] -= f * rows_[r][j];
            }
        }
        if (sgn(obj_[c]) != 0) {
            const Rational f = obj_[c];
            for (std::size_t j = 0; j <= cols_; ++j) {
                obj_[j] -= f * rows_[r][j];
            }
        }
        basis_[r] = c;
    }

    void drop_row(std::size_t r)
    {
        rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(r));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
    }

    Rational value() const { return -obj_[cols_]; }
    std::vector<Row>& rows() { return rows_; }
    std::vector<std::size_t>& basis() { return basis_; }

    Row point() const
    {
        Row y(cols_, Rational(0));
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            y[basis_[i]] = rows_[i][cols_];
        }
        return y;
    }

    Row direction(std::size_t enter) const
    {
        Row d(cols_, Rational(0));
        d[enter] = 1;
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            d[basis_[i]] = -rows_[i][enter];
        }
        return d;
    }

private:
    std::vector<Row> rows_;
    std::vector<std::size_t> basis_;
    std::size_t cols_;
    Row obj_;
};

} // namespace

LpResult solve(const LinearProgram& lp)
{
    const std::size_t n = lp.num_vars;
    if (lp.objective.size() != n || (!lp.nonnegative.empty() && lp.nonnegative.size() != n)) {
        throw DimensionMismatch("LP objective or sign vector has the wrong size");
    }
    // Column layout: split variables, then slacks, then artificials.
    std::vector<std::size_t> pos_col(n);
    std::vector<std::optional<std::size_t>> neg_col(n);
    std::size_t cols = 0;
    for (std::size_t j = 0; j < n; ++j) {
        pos_col[j] = cols++;
        if (lp.nonnegative.empty() || !lp.nonnegative[j]) {
            neg_col[j] = cols++;
        }
    }
    const std::size_t structural = cols;
    const std::size_t n_le = lp.le_rows.size();
    const std::size_t n_rows = n_le + lp.eq_rows.size();
    const std::size_t first_art = structural + n_le;
    const std::size_t total = first_art + n_rows;

    std::vector<Row> rows(n_rows, Row(total + 1, Rational(0)));
    std::vector<std::size_t> basis(n_rows);
    for (std::size_t i = 0; i < n_rows; ++i) {
        const bool le = i < n_le;
        const Row& src = le ? lp.le_rows[i] : lp.eq_rows[i - n_le];
        Rational rhs = le ? lp.le_rhs[i] : lp.eq_rhs[i - n_le];
        Row& r = rows[i];
        for (std::size_t j = 0; j < n; ++j) {
            r[pos_col[j]] = src[j];
            if (neg_col[j]) {
                r[*neg_col[j]] = -src[j];
            }
        }
        if (le) {
            r[structural + i] = 1;
        }
        r[total] = rhs;
        if (sgn(rhs) < 0) {
            for (auto& x : r) {
                x = -x;
            }
        }
        r[first_art + i] = 1;
        basis[i] = first_art + i;
    }

    Tableau t(std::move(rows), std::move(basis), total);
    Row phase1(total, Rational(0));
    for (std::size_t i = 0; i < n_rows; ++i) {
        phase1[first_art + i] = 1;
    }
    t.set_objective(phase1);
    t.run(total);
    LpResult result;
    if (sgn(t.value()) != 0) {
        result.status = LpStatus::infeasible;
        return result;
    }
    // Drive remaining artificials out of the basis or drop redundant rows.
    for (std::size_t i = 0; i < t.rows().size();) {
        if (t.basis()[i] < first_art) {
            ++i;
            continue;
        }
        std::size_t col = first_art;
        for (std::size_t j = 0; j < first_art; ++j) {
            if (sgn(t.rows()[i][j]) != 0) {
                col = j;
                break;
            }
        }
        if (col == first_art) {
            t.drop_row(i);
        } else {
            t.pivot(i, col);
            ++i;
        }
    }

    Row phase2(total, Rational(0));
    for (std::size_t j = 0; j < n; ++j) {
        phase2[pos_col[j]] = lp.objective[j];
        if (neg_col[j]) {
            phase2[*neg_col[j]] = -lp.objective[j];
        }
    }
    t.set_objective(phase2);
    const auto unbounded = t.run(first_art);

    auto to_x = [&](const Row& y) {
        std::vector<Rational> x(n);
        for (std::size_t j = 0; j < n; ++j) {
            x[j] = y[pos_col[j]];
            if (neg_col[j]) {
                x[j] -= y[*neg_col[j]];
            }
        }
        return x;
    };
    result.x = to_x(t.point());
    if (unbounded) {
        result.status = LpStatus::unbounded;
        result.ray = to_x(t.direction(*unbounded));
        return result;
    }
    result.status = LpStatus::optimal;
    result.value = t.value();
    return result;
}

} // namespace arcstab
