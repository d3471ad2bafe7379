#pragma once

#include "wsuper/poly.hpp"

namespace wsuper {

// Element of the rational-function field Q(l). Canonical form: gcd(num, den) = 1
// and den monic, so equality is syntactic.
class RatFunc {
public:
    RatFunc() : den_(Rational(1)) {}
    RatFunc(Rational constant) : num_(std::move(constant)), den_(Rational(1)) {}
    RatFunc(Poly num, Poly den);

    static RatFunc variable() { return RatFunc(Poly::variable(), Poly(Rational(1))); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }
    Rational constant_value() const { return num_.coeff(0); } // pre: is_constant()

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    RatFunc operator-() const;
    RatFunc inverse() const;
    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    // Exact evaluation at l = x; PoleAtSpecialization when den(x) = 0.
    Rational specialize(const Rational& x) const;

private:
    void normalize();
    Poly num_;
    Poly den_;
};

} // namespace wsuper
