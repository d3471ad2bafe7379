#include "wsuper/scalar.hpp"

namespace wsuper {

Scalar Scalar::from_rational(Rational q, const ScalarMode& m) {
    Scalar s(m);
    if (m.is_symbolic())
        s.fun_ = RatFunc(std::move(q));
    else
        s.rat_ = std::move(q);
    return s;
}

Scalar Scalar::lambda(const ScalarMode& m) {
    Scalar s(m);
    if (m.is_symbolic())
        s.fun_ = RatFunc::variable();
    else
        s.rat_ = m.lambda0();
    return s;
}

Scalar Scalar::from_ratfunc(const RatFunc& f, const ScalarMode& m) {
    Scalar s(m);
    if (m.is_symbolic())
        s.fun_ = f;
    else
        s.rat_ = f.specialize(m.lambda0());
    return s;
}

bool Scalar::is_zero() const { return mode_.is_symbolic() ? fun_.is_zero() : rat_.is_zero(); }

bool Scalar::is_one() const {
    if (mode_.is_symbolic())
        return fun_.is_constant() && fun_.constant_value().is_one();
    return rat_.is_one();
}

bool Scalar::is_constant() const { return mode_.is_symbolic() ? fun_.is_constant() : true; }

Rational Scalar::constant_value() const {
    return mode_.is_symbolic() ? fun_.constant_value() : rat_;
}

void Scalar::require_same_mode(const Scalar& a, const Scalar& b) {
    if (a.mode_ != b.mode_)
        fail(Errc::ModeMismatch, "scalars from different modes (" + a.mode_.to_string() + " vs " +
                                     b.mode_.to_string() + ")");
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    Scalar::require_same_mode(a, b);
    Scalar s(a.mode_);
    if (a.mode_.is_symbolic())
        s.fun_ = a.fun_ + b.fun_;
    else
        s.rat_ = a.rat_ + b.rat_;
    return s;
}

Scalar operator-(const Scalar& a, const Scalar& b) {
    Scalar::require_same_mode(a, b);
    Scalar s(a.mode_);
    if (a.mode_.is_symbolic())
        s.fun_ = a.fun_ - b.fun_;
    else
        s.rat_ = a.rat_ - b.rat_;
    return s;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
    Scalar::require_same_mode(a, b);
    Scalar s(a.mode_);
    if (a.mode_.is_symbolic())
        s.fun_ = a.fun_ * b.fun_;
    else
        s.rat_ = a.rat_ * b.rat_;
    return s;
}

Scalar operator/(const Scalar& a, const Scalar& b) {
    Scalar::require_same_mode(a, b);
    if (b.is_zero())
        fail(Errc::DivisionByZero, "scalar division by zero");
    Scalar s(a.mode_);
    if (a.mode_.is_symbolic())
        s.fun_ = a.fun_ / b.fun_;
    else
        s.rat_ = a.rat_ / b.rat_;
    return s;
}

Scalar Scalar::operator-() const {
    Scalar s(mode_);
    if (mode_.is_symbolic())
        s.fun_ = -fun_;
    else
        s.rat_ = -rat_;
    return s;
}

Scalar Scalar::inverse() const {
    if (is_zero())
        fail(Errc::DivisionByZero, "inverse of zero scalar");
    Scalar s(mode_);
    if (mode_.is_symbolic())
        s.fun_ = fun_.inverse();
    else
        s.rat_ = rat_.inverse();
    return s;
}

Scalar Scalar::pow(std::int64_t e) const {
    Scalar base = *this;
    if (e < 0) {
        base = inverse();
        e = -e;
    }
    Scalar acc = Scalar::one(mode_);
    while (e > 0) {
        if (e & 1)
            acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

bool operator==(const Scalar& a, const Scalar& b) {
    Scalar::require_same_mode(a, b);
    return a.mode_.is_symbolic() ? a.fun_ == b.fun_ : a.rat_ == b.rat_;
}

} // namespace wsuper
