#include "arcstab/laurent_series.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "arcstab/errors.hpp"

namespace arcstab {

namespace {

constexpr std::int64_t kInfinitePrecision = std::numeric_limits<std::int64_t>::max();

std::int64_t abs_prec_or_inf(const LaurentSeries& s)
{
    const auto p = s.abs_precision();
    return p ? *p : kInfinitePrecision;
}

} // namespace

LaurentSeries LaurentSeries::constant(const GaussianRational& c)
{
    return monomial(c, 0);
}

LaurentSeries LaurentSeries::monomial(const GaussianRational& c, std::int64_t exponent)
{
    LaurentSeries s;
    if (c.is_zero()) {
        return s;
    }
    s.kind_ = Kind::normal;
    s.exact_ = true;
    s.lead_ = exponent;
    s.coeffs_.push_back(c);
    return s;
}

LaurentSeries LaurentSeries::big_o(std::int64_t n)
{
    LaurentSeries s;
    s.kind_ = Kind::placeholder;
    s.exact_ = false;
    s.lead_ = n;
    s.prec_ = 0;
    return s;
}

LaurentSeries LaurentSeries::polynomial(std::int64_t lead, std::vector<GaussianRational> coeffs)
{
    LaurentSeries s;
    s.kind_ = Kind::normal;
    s.exact_ = true;
    s.lead_ = lead;
    s.coeffs_ = std::move(coeffs);
    s.normalize();
    return s;
}

LaurentSeries LaurentSeries::truncated(std::int64_t lead, std::vector<GaussianRational> coeffs,
                                       std::int64_t abs_precision)
{
    if (abs_precision <= lead) {
        return big_o(abs_precision);
    }
    LaurentSeries s;
    s.kind_ = Kind::normal;
    s.exact_ = false;
    s.lead_ = lead;
    s.prec_ = abs_precision - lead;
    coeffs.resize(static_cast<std::size_t>(s.prec_));
    s.coeffs_ = std::move(coeffs);
    s.normalize();
    return s;
}

void LaurentSeries::normalize()
{
    if (kind_ != Kind::normal) {
        return;
    }
    std::size_t first = 0;
    while (first < coeffs_.size() && coeffs_[first].is_zero()) {
        ++first;
    }
    if (exact_) {
        std::size_t last = coeffs_.size();
        while (last > first && coeffs_[last - 1].is_zero()) {
            --last;
        }
        if (first == last) {
            *this = LaurentSeries{};
            return;
        }
        coeffs_.erase(coeffs_.begin() + static_cast<std::ptrdiff_t>(last), coeffs_.end());
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(first));
        lead_ += static_cast<std::int64_t>(first);
        return;
    }
    if (first == coeffs_.size()) {
        *this = big_o(lead_ + prec_);
        return;
    }
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(first));
    lead_ += static_cast<std::int64_t>(first);
    prec_ -= static_cast<std::int64_t>(first);
}

std::optional<std::int64_t> LaurentSeries::precision() const
{
    if (is_exact()) {
        return std::nullopt;
    }
    return prec_;
}

std::optional<std::int64_t> LaurentSeries::abs_precision() const
{
    if (is_exact()) {
        return std::nullopt;
    }
    return lead_ + prec_;
}

Valuation LaurentSeries::ord() const
{
    switch (kind_) {
    case Kind::zero:
        return Valuation::infinity();
    case Kind::placeholder:
        throw PrecisionExhausted("order of vanishing undecidable: series is O(z^" + std::to_string(lead_) +
                                 ") with no known nonzero coefficient");
    case Kind::normal:
        break;
    }
    return Valuation(lead_);
}

GaussianRational LaurentSeries::coefficient(std::int64_t e) const
{
    if (kind_ == Kind::zero || e < lead_) {
        return {};
    }
    if (kind_ == Kind::placeholder) {
        throw PrecisionExhausted("coefficient of z^" + std::to_string(e) + " is beyond the known window");
    }
    const auto idx = static_cast<std::uint64_t>(e - lead_);
    if (exact_) {
        return idx < coeffs_.size() ? coeffs_[idx] : GaussianRational{};
    }
    if (e >= lead_ + prec_) {
        throw PrecisionExhausted("coefficient of z^" + std::to_string(e) + " is beyond the known window");
    }
    return coeffs_[idx];
}

LaurentSeries& LaurentSeries::operator+=(const LaurentSeries& o)
{
    if (o.is_exact_zero()) {
        return *this;
    }
    if (is_exact_zero()) {
        return *this = o;
    }
    const std::int64_t abs_prec = std::min(abs_prec_or_inf(*this), abs_prec_or_inf(o));
    const bool exact = abs_prec == kInfinitePrecision;

    std::int64_t low = kInfinitePrecision;
    std::int64_t high = std::numeric_limits<std::int64_t>::min(); // exclusive
    for (const LaurentSeries* s : std::array<const LaurentSeries*, 2>{this, &o}) {
        if (s->is_normal()) {
            low = std::min(low, s->lead_);
            high = std::max(high, s->lead_ + static_cast<std::int64_t>(s->coeffs_.size()));
        }
    }
    if (!exact) {
        high = std::min(high, abs_prec);
    }
    if (low == kInfinitePrecision || low >= high) {
        // Nothing known survives below the precision bound.
        return *this = big_o(abs_prec);
    }

    std::vector<GaussianRational> out(static_cast<std::size_t>(high - low));
    for (const LaurentSeries* s : std::array<const LaurentSeries*, 2>{this, &o}) {
        if (!s->is_normal()) {
            continue;
        }
        for (std::size_t j = 0; j < s->coeffs_.size(); ++j) {
            const std::int64_t e = s->lead_ + static_cast<std::int64_t>(j);
            if (e >= high) {
                break;
            }
            out[static_cast<std::size_t>(e - low)] += s->coeffs_[j];
        }
    }
    if (exact) {
        return *this = polynomial(low, std::move(out));
    }
    return *this = truncated(low, std::move(out), abs_prec);
}

LaurentSeries& LaurentSeries::operator-=(const LaurentSeries& o)
{
    return *this += -o;
}

LaurentSeries& LaurentSeries::operator*=(const LaurentSeries& o)
{
    return *this = *this * o;
}

LaurentSeries operator-(const LaurentSeries& a)
{
    LaurentSeries r = a;
    for (auto& c : r.coeffs_) {
        c = -c;
    }
    return r;
}

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b)
{
    using Kind = LaurentSeries::Kind;
    if (a.is_exact_zero() || b.is_exact_zero()) {
        return {};
    }
    if (a.kind_ == Kind::placeholder || b.kind_ == Kind::placeholder) {
        // O(z^n) * s has everything below z^(n + lead(s)) vanishing.
        return LaurentSeries::big_o(a.lead_ + b.lead_);
    }
    const std::int64_t lead = a.lead_ + b.lead_;
    if (a.exact_ && b.exact_) {
        if (a.coeffs_.size() == 1) {
            LaurentSeries r = b.scaled(a.coeffs_[0]);
            r.lead_ = lead;
            return r;
        }
        std::vector<GaussianRational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i].is_zero()) {
                continue;
            }
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
                out[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return LaurentSeries::polynomial(lead, std::move(out));
    }
    const std::int64_t pa = a.exact_ ? kInfinitePrecision : a.prec_;
    const std::int64_t pb = b.exact_ ? kInfinitePrecision : b.prec_;
    const std::int64_t prec = std::min(pa, pb);
    std::vector<GaussianRational> out(static_cast<std::size_t>(prec));
    for (std::size_t i = 0; i < a.coeffs_.size() && static_cast<std::int64_t>(i) < prec; ++i) {
        if (a.coeffs_[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; j < b.coeffs_.size() && static_cast<std::int64_t>(i + j) < prec; ++j) {
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return LaurentSeries::truncated(lead, std::move(out), lead + prec);
}

LaurentSeries LaurentSeries::scaled(const GaussianRational& c) const
{
    if (c.is_zero()) {
        return {};
    }
    LaurentSeries r = *this;
    for (auto& x : r.coeffs_) {
        x *= c;
    }
    return r;
}

LaurentSeries LaurentSeries::shifted(std::int64_t k) const
{
    if (is_exact_zero()) {
        return *this;
    }
    LaurentSeries r = *this;
    r.lead_ += k;
    return r;
}

LaurentSeries LaurentSeries::truncated_at(std::int64_t abs_precision) const
{
    switch (kind_) {
    case Kind::zero:
        return big_o(abs_precision);
    case Kind::placeholder:
        return big_o(std::min(lead_, abs_precision));
    case Kind::normal:
        break;
    }
    const std::int64_t cap = std::min(abs_prec_or_inf(*this), abs_precision);
    std::vector<GaussianRational> c = coeffs_;
    return truncated(lead_, std::move(c), cap);
}

LaurentSeries LaurentSeries::inverse(int working_precision) const
{
    if (kind_ == Kind::zero) {
        throw ZeroDivision("inverse of the zero series");
    }
    if (kind_ == Kind::placeholder) {
        throw ZeroDivision("inverse of a series that is zero to known precision (O(z^" + std::to_string(lead_) +
                           "))");
    }
    if (is_exact_monomial()) {
        return monomial(coeffs_[0].inverse(), -lead_);
    }
    if (working_precision < 1) {
        throw InvalidArgument("working precision must be at least 1");
    }
    const std::int64_t prec = exact_ ? working_precision : prec_;
    const GaussianRational inv0 = coeffs_[0].inverse();
    std::vector<GaussianRational> out(static_cast<std::size_t>(prec));
    out[0] = inv0;
    for (std::int64_t k = 1; k < prec; ++k) {
        GaussianRational acc;
        const std::int64_t upto = std::min<std::int64_t>(k, static_cast<std::int64_t>(coeffs_.size()) - 1);
        for (std::int64_t j = 1; j <= upto; ++j) {
            acc += coeffs_[static_cast<std::size_t>(j)] * out[static_cast<std::size_t>(k - j)];
        }
        out[static_cast<std::size_t>(k)] = -(acc * inv0);
    }
    return truncated(-lead_, std::move(out), -lead_ + prec);
}

std::complex<double> LaurentSeries::eval(std::complex<double> z, double max_radius) const
{
    if (z == std::complex<double>(0.0, 0.0)) {
        throw DomainError("cannot evaluate a Laurent series at z = 0");
    }
    if (std::abs(z) > max_radius) {
        throw DomainError("|z| = " + std::to_string(std::abs(z)) + " exceeds the evaluation radius " +
                          std::to_string(max_radius));
    }
    if (kind_ != Kind::normal) {
        return {0.0, 0.0};
    }
    std::complex<double> acc{0.0, 0.0};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * z + it->to_complex();
    }
    return acc * std::pow(z, static_cast<int>(lead_));
}

bool LaurentSeries::agrees_with(const LaurentSeries& o) const
{
    const LaurentSeries d = *this - o;
    return d.is_exact_zero() || d.is_placeholder();
}

bool operator==(const LaurentSeries& a, const LaurentSeries& b)
{
    return a.kind_ == b.kind_ && a.exact_ == b.exact_ && a.lead_ == b.lead_ && a.prec_ == b.prec_ &&
           a.coeffs_ == b.coeffs_;
}

namespace {

std::string term_string(const GaussianRational& c, std::int64_t e, bool first)
{
    std::string sign;
    std::string body;
    const std::string zpart = "*z^" + std::to_string(e);
    if (c.is_real()) {
        const bool neg = sgn(c.re()) < 0;
        sign = neg ? (first ? "-" : " - ") : (first ? "" : " + ");
        body = to_fraction_string(abs(c.re())) + zpart;
    } else if (sgn(c.re()) == 0) {
        const bool neg = sgn(c.im()) < 0;
        sign = neg ? (first ? "-" : " - ") : (first ? "" : " + ");
        body = to_fraction_string(abs(c.im())) + "*i" + zpart;
    } else {
        sign = first ? "" : " + ";
        body = "(" + c.to_string() + ")" + zpart;
    }
    return sign + body;
}

} // namespace

std::string LaurentSeries::to_string() const
{
    if (kind_ == Kind::zero) {
        return "0";
    }
    if (kind_ == Kind::placeholder) {
        return "O(z^" + std::to_string(lead_) + ")";
    }
    std::string out;
    bool first = true;
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
        if (coeffs_[j].is_zero()) {
            continue;
        }
        out += term_string(coeffs_[j], lead_ + static_cast<std::int64_t>(j), first);
        first = false;
    }
    if (!exact_) {
        out += " + O(z^" + std::to_string(lead_ + prec_) + ")";
    }
    return out;
}

LaurentSeries divide(const LaurentSeries& a, const LaurentSeries& b, int working_precision)
{
    if (b.is_exact_zero() || b.is_placeholder()) {
        return a * b.inverse(working_precision); // throws ZeroDivision
    }
    if (a.is_exact_zero()) {
        return a;
    }
    if (b.is_exact_monomial()) {
        return a * b.inverse(working_precision);
    }
    if (a.is_exact() && b.is_exact()) {
        // Exact division in the Laurent polynomial ring, verified.
        const auto& ac = a.coeffs();
        const auto& bc = b.coeffs();
        if (ac.size() >= bc.size()) {
            const std::size_t qlen = ac.size() - bc.size() + 1;
            const GaussianRational inv0 = bc[0].inverse();
            std::vector<GaussianRational> q(qlen);
            for (std::size_t k = 0; k < qlen; ++k) {
                GaussianRational acc = ac[k];
                for (std::size_t j = 1; j <= k && j < bc.size(); ++j) {
                    acc -= bc[j] * q[k - j];
                }
                q[k] = acc * inv0;
            }
            LaurentSeries quotient = LaurentSeries::polynomial(a.lead() - b.lead(), std::move(q));
            if (quotient * b == a) {
                return quotient;
            }
        }
    }
    return a * b.inverse(working_precision);
}

} // namespace arcstab
