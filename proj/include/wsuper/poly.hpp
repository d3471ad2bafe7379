#pragma once

#include <string>
#include <utility>
#include <vector>

#include "wsuper/rational.hpp"

namespace wsuper {

// Dense univariate polynomial in the formal parameter (rendered as `l`).
// Coefficients ascending by degree; no trailing zeros; zero polynomial is empty.
class Poly {
public:
    Poly() = default;
    Poly(Rational constant);
    explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly variable(); // the monomial l
    static Poly monomial(Rational coeff, int exp);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    const Rational& leading() const { return c_.back(); }          // pre: nonzero
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(int exp) const;

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly operator-() const;
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    // Euclidean division over the field of rationals; pre: divisor nonzero.
    static std::pair<Poly, Poly> divmod(const Poly& num, const Poly& den);
    // Monic gcd (monic Euclidean algorithm); gcd(0,0) = 0.
    static Poly gcd_monic(Poly a, Poly b);

    Poly monic() const; // pre: nonzero
    Rational eval(const Rational& x) const;

private:
    void trim();
    std::vector<Rational> c_;
};

} // namespace wsuper
