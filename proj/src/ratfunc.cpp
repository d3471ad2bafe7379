#include "wsuper/ratfunc.hpp"

namespace wsuper {

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero())
        fail(Errc::DivisionByZero, "rational function with zero denominator");
    normalize();
}

void RatFunc::normalize() {
    if (num_.is_zero()) {
        den_ = Poly(Rational(1));
        return;
    }
    Poly g = Poly::gcd_monic(num_, den_);
    if (g.degree() > 0) {
        num_ = Poly::divmod(num_, g).first;
        den_ = Poly::divmod(den_, g).first;
    }
    Rational lead_inv = den_.leading().inverse();
    num_ = num_ * Poly(lead_inv);
    den_ = den_ * Poly(lead_inv);
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero())
        fail(Errc::DivisionByZero, "rational function division by zero");
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

RatFunc RatFunc::operator-() const {
    RatFunc out;
    out.num_ = -num_;
    out.den_ = den_;
    return out;
}

RatFunc RatFunc::inverse() const {
    if (is_zero())
        fail(Errc::DivisionByZero, "inverse of zero rational function");
    return RatFunc(den_, num_);
}

Rational RatFunc::specialize(const Rational& x) const {
    Rational d = den_.eval(x);
    if (d.is_zero())
        fail(Errc::PoleAtSpecialization, "denominator vanishes at l = " + x.to_string());
    return num_.eval(x) / d;
}

} // namespace wsuper
