#pragma once

#include <complex>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "arcstab/gaussian_rational.hpp"

namespace arcstab {

/// Relative truncation order used when an exact series has to be expanded
/// into an infinite one (inverting a non-monomial, dividing by one).
inline constexpr int kDefaultPrecision = 16;

/// Largest |z| accepted by LaurentSeries::eval unless the caller overrides it.
inline constexpr double kDefaultEvalRadius = 0.1;

/// Order of vanishing at z = 0, with +infinity for the zero series.
class Valuation {
public:
    constexpr Valuation() = default; // +infinity
    constexpr explicit Valuation(std::int64_t v) : value_(v), finite_(true) {}

    static constexpr Valuation infinity() { return {}; }

    constexpr bool is_infinite() const { return !finite_; }
    constexpr bool is_finite() const { return finite_; }
    // Precondition: finite.
    constexpr std::int64_t value() const { return value_; }

    friend constexpr bool operator==(const Valuation& a, const Valuation& b)
    {
        return a.finite_ == b.finite_ && (!a.finite_ || a.value_ == b.value_);
    }
    friend constexpr bool operator<(const Valuation& a, const Valuation& b)
    {
        if (!a.finite_) {
            return false;
        }
        return !b.finite_ || a.value_ < b.value_;
    }

    std::string to_string() const { return finite_ ? std::to_string(value_) : "+inf"; }

private:
    std::int64_t value_ = 0;
    bool finite_ = false;
};

/// Formal Laurent series over the Gaussian rationals.
///
/// A value is in one of three states:
///  - the exact zero series (valuation +infinity);
///  - a placeholder O(z^n): every coefficient below z^n vanished, nothing is
///    known above;
///  - a normalized series c_0 z^lead + c_1 z^(lead+1) + ... with c_0 != 0.
///
/// A normalized series is either exact (a Laurent polynomial, all omitted
/// coefficients are zero) or truncated, known modulo z^(lead + prec).
/// Truncated series always store exactly `prec` coefficients.
class LaurentSeries {
public:
    LaurentSeries() = default; // exact zero

    static LaurentSeries zero() { return {}; }
    static LaurentSeries one() { return constant(GaussianRational(1)); }
    static LaurentSeries constant(const GaussianRational& c);
    static LaurentSeries monomial(const GaussianRational& c, std::int64_t exponent);
    /// O(z^n)
    static LaurentSeries big_o(std::int64_t n);
    /// Exact Laurent polynomial sum_j coeffs[j] z^(lead+j).
    static LaurentSeries polynomial(std::int64_t lead, std::vector<GaussianRational> coeffs);
    /// Truncated series sum_j coeffs[j] z^(lead+j) + O(z^abs_precision).
    /// Coefficients at or above abs_precision are dropped.
    static LaurentSeries truncated(std::int64_t lead, std::vector<GaussianRational> coeffs,
                                   std::int64_t abs_precision);

    bool is_exact_zero() const { return kind_ == Kind::zero; }
    bool is_placeholder() const { return kind_ == Kind::placeholder; }
    bool is_normal() const { return kind_ == Kind::normal; }
    /// True for the zero series and for Laurent polynomials.
    bool is_exact() const { return kind_ == Kind::zero || (kind_ == Kind::normal && exact_); }
    /// Exact c z^k.
    bool is_exact_monomial() const { return is_normal() && exact_ && coeffs_.size() == 1; }

    /// Lowest stored exponent; for a placeholder O(z^n) this is n.
    std::int64_t lead() const { return lead_; }
    const std::vector<GaussianRational>& coeffs() const { return coeffs_; }
    /// Relative precision; nullopt when exact.
    std::optional<std::int64_t> precision() const;
    /// Exponent below which every coefficient is known; nullopt when exact.
    std::optional<std::int64_t> abs_precision() const;

    /// Order of vanishing. Throws PrecisionExhausted on a placeholder.
    Valuation ord() const;

    /// Coefficient of z^e. Throws PrecisionExhausted if e is outside the
    /// known window.
    GaussianRational coefficient(std::int64_t e) const;

    LaurentSeries& operator+=(const LaurentSeries& o);
    LaurentSeries& operator-=(const LaurentSeries& o);
    LaurentSeries& operator*=(const LaurentSeries& o);

    friend LaurentSeries operator+(LaurentSeries a, const LaurentSeries& b) { return a += b; }
    friend LaurentSeries operator-(LaurentSeries a, const LaurentSeries& b) { return a -= b; }
    friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);
    friend LaurentSeries operator-(const LaurentSeries& a);

    LaurentSeries scaled(const GaussianRational& c) const;
    /// Multiplication by z^k.
    LaurentSeries shifted(std::int64_t k) const;
    /// Forget every coefficient at or above z^abs_precision.
    LaurentSeries truncated_at(std::int64_t abs_precision) const;

    /// Multiplicative inverse. Exact monomials invert exactly; other exact
    /// series are expanded to `working_precision` relative terms; truncated
    /// series keep their own relative precision.
    LaurentSeries inverse(int working_precision = kDefaultPrecision) const;

    /// Sum of the known terms at z, in double precision.
    std::complex<double> eval(std::complex<double> z, double max_radius = kDefaultEvalRadius) const;

    /// True if a - b vanishes within the common known window.
    bool agrees_with(const LaurentSeries& o) const;

    friend bool operator==(const LaurentSeries& a, const LaurentSeries& b);

    /// Canonical literal, e.g. "1/1*z^-1 + 2/3*z^0 + O(z^4)". The zero series
    /// renders as "0".
    std::string to_string() const;

private:
    enum class Kind { zero, placeholder, normal };

    void normalize();

    Kind kind_ = Kind::zero;
    bool exact_ = true;
    std::int64_t lead_ = 0;
    std::int64_t prec_ = 0;
    std::vector<GaussianRational> coeffs_;
};

/// Exact quotient when both operands are exact and the division is exact in
/// the Laurent polynomial ring; otherwise a * b^{-1} at working precision.
LaurentSeries divide(const LaurentSeries& a, const LaurentSeries& b,
                     int working_precision = kDefaultPrecision);

/// Parse the series literal grammar: a signed sum of terms, each term a
/// product of factors drawn from rationals `a/b`, parenthesized Gaussian
/// rationals `(a/b+c/d*i)`, the imaginary unit `i`, and powers `z^e`; the
/// special term `O(z^n)` marks truncation. Whitespace is ignored. Throws
/// ParseError with line 1 and a 1-based column.
LaurentSeries parse_series(std::string_view text);

/// Parse a Gaussian rational literal such as "3", "-1/2", "2/3*i",
/// "1/2+3/4*i" or "(1/2-i)".
GaussianRational parse_gaussian_rational(std::string_view text);

} // namespace arcstab
