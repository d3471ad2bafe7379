#pragma once

#include <cstdint>
#include <string>

#include "wsuper/ratfunc.hpp"

namespace wsuper {

// All scalars of one computation share a mode: Symbolic treats l as transcendental,
// Specialized(l0) computes in Q with l already substituted.
class ScalarMode {
public:
    static ScalarMode symbolic() { return ScalarMode(true, Rational()); }
    static ScalarMode specialized(Rational lambda0) { return ScalarMode(false, std::move(lambda0)); }

    bool is_symbolic() const { return symbolic_; }
    const Rational& lambda0() const { return lambda0_; } // pre: !is_symbolic()

    friend bool operator==(const ScalarMode& a, const ScalarMode& b) {
        return a.symbolic_ == b.symbolic_ && (a.symbolic_ || a.lambda0_ == b.lambda0_);
    }
    friend bool operator!=(const ScalarMode& a, const ScalarMode& b) { return !(a == b); }

    std::string to_string() const { return symbolic_ ? "symbolic" : lambda0_.to_string(); }

private:
    ScalarMode(bool sym, Rational l0) : symbolic_(sym), lambda0_(std::move(l0)) {}
    bool symbolic_;
    Rational lambda0_;
};

class Scalar {
public:
    Scalar() = default; // symbolic zero
    static Scalar zero(const ScalarMode& m) { return from_rational(Rational(), m); }
    static Scalar one(const ScalarMode& m) { return from_rational(Rational(1), m); }
    static Scalar of(long n, const ScalarMode& m) { return from_rational(Rational(n), m); }
    static Scalar from_rational(Rational q, const ScalarMode& m);
    // The deformation parameter itself: l in symbolic mode, l0 when specialized.
    static Scalar lambda(const ScalarMode& m);
    // Coerce a rational-function literal into the mode (specializing may hit a pole).
    static Scalar from_ratfunc(const RatFunc& f, const ScalarMode& m);

    const ScalarMode& mode() const { return mode_; }
    bool is_zero() const;
    bool is_one() const;
    bool is_constant() const;
    Rational constant_value() const; // pre: is_constant()
    const RatFunc& func() const { return fun_; }   // pre: symbolic mode
    const Rational& rat() const { return rat_; }   // pre: specialized mode

    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);
    Scalar operator-() const;
    Scalar inverse() const;
    Scalar pow(std::int64_t e) const; // pre for e < 0: nonzero
    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    std::string to_string() const;

private:
    explicit Scalar(ScalarMode m) : mode_(std::move(m)) {}
    static void require_same_mode(const Scalar& a, const Scalar& b);
    ScalarMode mode_ = ScalarMode::symbolic();
    Rational rat_;
    RatFunc fun_;
};

} // namespace wsuper
