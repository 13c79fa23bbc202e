#pragma once

#include <cstddef>
#include <vector>

#include "arcstab/gaussian_rational.hpp"

namespace arcstab {

/// minimize c.x subject to A_le x <= b_le, A_eq x = b_eq, with each variable
/// either free or constrained to x_j >= 0. Everything is exact rational.
struct LinearProgram {
    std::size_t num_vars = 0;
    std::vector<Rational> objective;
    std::vector<std::vector<Rational>> le_rows;
    std::vector<Rational> le_rhs;
    std::vector<std::vector<Rational>> eq_rows;
    std::vector<Rational> eq_rhs;
    std::vector<bool> nonnegative; // empty means all free

    explicit LinearProgram(std::size_t n) : num_vars(n), objective(n) {}

    void add_le(std::vector<Rational> row, Rational rhs);
    void add_eq(std::vector<Rational> row, Rational rhs);
};

enum class LpStatus { optimal, infeasible, unbounded };

struct LpResult {
    LpStatus status = LpStatus::infeasible;
    Rational value;              // optimal objective, when optimal
    std::vector<Rational> x;     // optimal point, or a feasible point when unbounded
    std::vector<Rational> ray;   // improving direction when unbounded
};

/// Two-phase dense simplex with Bland's rule; terminates on every input.
LpResult solve(const LinearProgram& lp);

} // namespace arcstab
