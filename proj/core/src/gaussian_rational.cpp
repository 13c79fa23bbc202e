#include "arcstab/gaussian_rational.hpp"

#include "arcstab/errors.hpp"

namespace arcstab {

std::string to_fraction_string(const Rational& q)
{
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

GaussianRational GaussianRational::inverse() const
{
    if (is_zero()) {
        throw ZeroDivision("inverse of zero Gaussian rational");
    }
    const Rational n = norm_squared();
    return {re_ / n, -im_ / n};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o)
{
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o)
{
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o)
{
    if (sgn(im_) == 0 && sgn(o.im_) == 0) {
        re_ *= o.re_;
        return *this;
    }
    Rational re = re_ * o.re_ - im_ * o.im_;
    Rational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o)
{
    if (o.is_zero()) {
        throw ZeroDivision("division by zero Gaussian rational");
    }
    if (sgn(o.im_) == 0) {
        re_ /= o.re_;
        im_ /= o.re_;
        return *this;
    }
    return *this *= o.inverse();
}

std::string GaussianRational::to_string() const
{
    if (sgn(im_) == 0) {
        return to_fraction_string(re_);
    }
    if (sgn(re_) == 0) {
        return to_fraction_string(im_) + "*i";
    }
    std::string out = to_fraction_string(re_);
    out += sgn(im_) > 0 ? "+" : "-";
    out += to_fraction_string(abs(im_)) + "*i";
    return out;
}

} // namespace arcstab
