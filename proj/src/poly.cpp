#include "wsuper/poly.hpp"

namespace wsuper {

Poly::Poly(Rational constant) {
    if (!constant.is_zero())
        c_.push_back(std::move(constant));
}

Poly Poly::variable() { return monomial(Rational(1), 1); }

Poly Poly::monomial(Rational coeff, int exp) {
    Poly p;
    if (coeff.is_zero())
        return p;
    p.c_.assign(static_cast<std::size_t>(exp) + 1, Rational());
    p.c_.back() = std::move(coeff);
    return p;
}

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero())
        c_.pop_back();
}

Rational Poly::coeff(int exp) const {
    if (exp < 0 || exp >= static_cast<int>(c_.size()))
        return Rational();
    return c_[static_cast<std::size_t>(exp)];
}

Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Rational> out(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (i < a.c_.size())
            out[i] = out[i] + a.c_[i];
        if (i < b.c_.size())
            out[i] = out[i] + b.c_[i];
    }
    return Poly(std::move(out));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly Poly::operator-() const {
    std::vector<Rational> out;
    out.reserve(c_.size());
    for (const auto& x : c_)
        out.push_back(-x);
    return Poly(std::move(out));
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero())
        return Poly();
    std::vector<Rational> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            out[i + j] = out[i + j] + a.c_[i] * b.c_[j];
    return Poly(std::move(out));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& num, const Poly& den) {
    if (den.is_zero())
        fail(Errc::DivisionByZero, "polynomial division by zero");
    Poly rem = num;
    if (num.degree() < den.degree())
        return {Poly(), rem};
    std::vector<Rational> q(static_cast<std::size_t>(num.degree() - den.degree()) + 1);
    Rational lead_inv = den.leading().inverse();
    while (!rem.is_zero() && rem.degree() >= den.degree()) {
        int shift = rem.degree() - den.degree();
        Rational f = rem.leading() * lead_inv;
        q[static_cast<std::size_t>(shift)] = f;
        rem = rem - den * Poly::monomial(f, shift);
    }
    return {Poly(std::move(q)), rem};
}

Poly Poly::monic() const {
    Poly out = *this;
    Rational inv = leading().inverse();
    for (auto& x : out.c_)
        x = x * inv;
    return out;
}

Poly Poly::gcd_monic(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero())
        return a;
    return a.monic();
}

Rational Poly::eval(const Rational& x) const {
    Rational acc;
    for (std::size_t i = c_.size(); i-- > 0;)
        acc = acc * x + c_[i];
    return acc;
}

} // namespace wsuper
