#pragma once

#include <map>
#include <memory>
#include <vector>

#include "wsuper/algebra.hpp"

namespace wsuper {

// Parameters of the sigma family: sigma(L_k) = eps a^k L_{eps k} + k a^k beta I_{eps k},
// sigma(I_k) = a^k mu I_{eps k}, sigma(H_{k+s}) = a^k x H_{eps(k+s)},
// sigma(G_{k+s}) = (x/(mu eps)) a^k G_{eps(k+s)} + (a^k gamma + 2k beta a^k x / mu) H_{eps(k+s)},
// subject to alpha mu != 0 and x^2 = alpha^{2s} mu^3.
struct SigmaParams {
    int epsilon = 1; // +1 or -1
    Scalar alpha, mu, beta, gamma, x;
};

// Automorphism given by window images plus provenance; the sigma / inner-exp closed
// forms evaluate exactly at any index, so compositions never shrink the window.
class AutMap {
public:
    enum class Kind { SigmaFamily, InnerExp, Composite };

    Kind kind() const { return kind_; }
    const AlgebraConfig& cfg() const { return cfg_; }
    HalfInt window() const { return window_; }
    const std::map<BasisIndex, Element>& images() const { return images_; }
    const SigmaParams& sigma_params() const; // pre: SigmaFamily
    const std::vector<std::pair<Scalar, std::int64_t>>& factors() const; // pre: InnerExp

    Element apply_basis(const BasisIndex& b) const;
    Element apply(const Element& e) const;

    friend bool operator==(const AutMap& a, const AutMap& b) {
        return a.window_ == b.window_ && a.images_ == b.images_;
    }

    friend AutMap make_sigma(const AlgebraConfig&, const SigmaParams&, HalfInt);
    friend AutMap make_sigma_unchecked(const AlgebraConfig&, const SigmaParams&, HalfInt);
    friend AutMap make_inner_exp(const AlgebraConfig&, const Scalar&, std::int64_t, HalfInt);
    friend AutMap identity_aut(const AlgebraConfig&, HalfInt);
    friend AutMap compose(const AutMap&, const AutMap&);
    friend AutMap invert(const AutMap&);

private:
    AutMap(AlgebraConfig cfg, HalfInt window, Kind kind)
        : cfg_(std::move(cfg)), window_(window), kind_(kind) {}
    void materialize();

    AlgebraConfig cfg_;
    HalfInt window_;
    Kind kind_;
    SigmaParams sigma_;                                   // SigmaFamily
    std::vector<std::pair<Scalar, std::int64_t>> factors_; // InnerExp: id + sum a_j ad I_{k_j}
    std::shared_ptr<const AutMap> left_, right_;          // Composite: left after right
    std::map<BasisIndex, Element> images_;
};

// Validates alpha, mu nonzero and x^2 = alpha^{2s} mu^3.
AutMap make_sigma(const AlgebraConfig& cfg, const SigmaParams& p, HalfInt window);
// Same images, no constraint check (for demonstrating necessity of the constraint).
AutMap make_sigma_unchecked(const AlgebraConfig& cfg, const SigmaParams& p, HalfInt window);
// exp(alpha ad I_k) = id + alpha ad I_k, exactly, since (ad I_k)^2 = 0.
AutMap make_inner_exp(const AlgebraConfig& cfg, const Scalar& alpha, std::int64_t k, HalfInt window);
AutMap identity_aut(const AlgebraConfig& cfg, HalfInt window);

AutMap compose(const AutMap& f, const AutMap& g); // f after g
AutMap invert(const AutMap& f);

// Parameters of sigma^{-1}; stays inside the family.
SigmaParams sigma_inverse_params(const AlgebraConfig& cfg, const SigmaParams& p);

// Parameter families with rational x: s = 0 uses mu = m^2, x = +-m^3;
// s = 1/2 uses alpha = a^2, mu = m^2, x = +-a m^3.
SigmaParams suggest_sigma_params(const AlgebraConfig& cfg, int epsilon, const Rational& alpha_root,
                                 const Rational& mu_root, bool negative_x, const Scalar& beta,
                                 const Scalar& gamma);

struct HomViolation {
    BasisIndex x, y;
    Element lhs, rhs; // phi([x,y]) vs [phi(x), phi(y)]
};

// Checks phi([x,y]) = [phi(x), phi(y)] on every basis pair with x, y, x+y in the
// window (zero-bracket family pairs included), plus parity preservation.
std::vector<HomViolation> verify_homomorphism(const AlgebraConfig& cfg, const AutMap& f,
                                              HalfInt window);

struct SigmaConstraintReport {
    struct Line {
        std::string name;
        bool pass;
    };
    std::vector<Line> lines;
    bool all_pass = true;
    const Line* line(const std::string& name) const;
};

SigmaConstraintReport check_sigma_constraints(const AlgebraConfig& cfg, const SigmaParams& p);

struct JDecomposition {
    std::vector<std::pair<Scalar, std::int64_t>> factors; // (alpha_j, k_j), k_j increasing
};

// Succeeds iff f = id + sum alpha_j ad I_{k_j} on the window; NotInJ otherwise.
JDecomposition decompose_into_inner_group(const AlgebraConfig& cfg, const AutMap& f);

} // namespace wsuper
