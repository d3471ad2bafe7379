#include "wsuper/automorphisms.hpp"

#include <algorithm>

#include "wsuper/linalg.hpp"

namespace wsuper {

const SigmaParams& AutMap::sigma_params() const {
    if (kind_ != Kind::SigmaFamily)
        fail(Errc::InvalidIndex, "not a sigma-family map");
    return sigma_;
}

const std::vector<std::pair<Scalar, std::int64_t>>& AutMap::factors() const {
    if (kind_ != Kind::InnerExp)
        fail(Errc::InvalidIndex, "not an inner-exponential map");
    return factors_;
}

namespace {

std::int64_t sigma_power_exponent(const AlgebraConfig& cfg, const BasisIndex& b) {
    // L_k, I_k use alpha^k; G_{k+s}, H_{k+s} use alpha^k with k = idx - s.
    HalfInt k = (b.fam == Family::L || b.fam == Family::I) ? b.idx : b.idx - cfg.s;
    return k.integer_value();
}

Element sigma_image(const AlgebraConfig& cfg, const SigmaParams& p, const BasisIndex& b) {
    const ScalarMode& mode = cfg.mode;
    std::int64_t k = sigma_power_exponent(cfg, b);
    Scalar ak = p.alpha.pow(k);
    Scalar eps = Scalar::of(p.epsilon, mode);
    HalfInt target = HalfInt(p.epsilon * b.idx.twice);
    Element out;
    switch (b.fam) {
        case Family::L:
            out.add_term({Family::L, target}, eps * ak);
            out.add_term({Family::I, target}, Scalar::of(k, mode) * ak * p.beta);
            break;
        case Family::I:
            out.add_term({Family::I, target}, ak * p.mu);
            break;
        case Family::H:
            out.add_term({Family::H, target}, ak * p.x);
            break;
        case Family::G: {
            out.add_term({Family::G, target}, p.x / (p.mu * eps) * ak);
            Scalar h = ak * p.gamma + Scalar::of(2 * k, mode) * p.beta * ak * p.x / p.mu;
            out.add_term({Family::H, target}, h);
            break;
        }
    }
    return out;
}

Element inner_exp_image(const AlgebraConfig& cfg,
                        const std::vector<std::pair<Scalar, std::int64_t>>& factors,
                        const BasisIndex& b) {
    Element out = Element::single(b, Scalar::one(cfg.mode));
    for (const auto& [alpha, k] : factors) {
        // ad I_k: L_n -> (k-n) I_{n+k}; G_p -> (k-2p) H_{p+k}; I, H -> 0.
        if (b.fam == Family::L) {
            Rational c = Rational(k) - Rational::from_halfint(b.idx);
            out.add_term({Family::I, b.idx + HalfInt::whole(k)},
                         alpha * Scalar::from_rational(c, cfg.mode));
        } else if (b.fam == Family::G) {
            Rational c = Rational(k) - Rational(2) * Rational::from_halfint(b.idx);
            out.add_term({Family::H, b.idx + HalfInt::whole(k)},
                         alpha * Scalar::from_rational(c, cfg.mode));
        }
    }
    return out;
}

} // namespace

Element AutMap::apply_basis(const BasisIndex& b) const {
    cfg_.require_valid(b);
    auto it = images_.find(b);
    if (it != images_.end())
        return it->second;
    switch (kind_) {
        case Kind::SigmaFamily: return sigma_image(cfg_, sigma_, b);
        case Kind::InnerExp: return inner_exp_image(cfg_, factors_, b);
        case Kind::Composite: return left_->apply(right_->apply_basis(b));
    }
    fail(Errc::InvalidIndex, "unreachable");
}

Element AutMap::apply(const Element& e) const {
    Element out;
    for (const auto& [b, c] : e.terms())
        out = out + apply_basis(b).scaled(c);
    return out;
}

void AutMap::materialize() {
    for (const BasisIndex& b : window_basis(cfg_, window_))
        images_.emplace(b, apply_basis(b));
    // Type invariants: parity-preserving, and the images' coefficient matrix has
    // full rank over the touched coordinates (injective on the window span).
    std::map<BasisIndex, int> target_col;
    std::vector<SparseVec> rows;
    for (const auto& [b, img] : images_) {
        SparseVec row;
        for (const auto& [t, c] : img.terms()) {
            if (t.parity() != b.parity())
                fail(Errc::ConstraintViolated, "image of " + b.to_string() + " changes parity");
            int col = static_cast<int>(target_col.size());
            auto [it, inserted] = target_col.emplace(t, col);
            row.push_back({it->second, c});
        }
        std::sort(row.begin(), row.end(), [](auto& a, auto& b2) { return a.first < b2.first; });
        rows.push_back(std::move(row));
    }
    RowReducer red(static_cast<int>(target_col.size()));
    for (auto& r : rows)
        red.insert(std::move(r));
    if (red.rank() != static_cast<int>(images_.size()))
        fail(Errc::NotInvertibleOnWindow, "window images are linearly dependent");
}

AutMap make_sigma_unchecked(const AlgebraConfig& cfg, const SigmaParams& p, HalfInt window) {
    if (p.epsilon != 1 && p.epsilon != -1)
        fail(Errc::ConstraintViolated, "epsilon must be +1 or -1");
    if (p.alpha.is_zero() || p.mu.is_zero())
        fail(Errc::ZeroParameter, "alpha and mu must be nonzero");
    AutMap f(cfg, window, AutMap::Kind::SigmaFamily);
    f.sigma_ = p;
    f.materialize();
    return f;
}

AutMap make_sigma(const AlgebraConfig& cfg, const SigmaParams& p, HalfInt window) {
    if (p.alpha.is_zero() || p.mu.is_zero())
        fail(Errc::ZeroParameter, "alpha and mu must be nonzero");
    Scalar lhs = p.x * p.x;
    Scalar rhs = p.alpha.pow(cfg.s.twice) * p.mu.pow(3); // alpha^{2s}
    if (!(lhs == rhs))
        fail(Errc::ConstraintViolated, "x^2 != alpha^{2s} mu^3 (" + lhs.to_string() + " vs " +
                                           rhs.to_string() + ")");
    return make_sigma_unchecked(cfg, p, window);
}

AutMap make_inner_exp(const AlgebraConfig& cfg, const Scalar& alpha, std::int64_t k,
                      HalfInt window) {
    AutMap f(cfg, window, AutMap::Kind::InnerExp);
    if (!alpha.is_zero())
        f.factors_.push_back({alpha, k});
    f.materialize();
    return f;
}

AutMap identity_aut(const AlgebraConfig& cfg, HalfInt window) {
    AutMap f(cfg, window, AutMap::Kind::InnerExp);
    f.materialize();
    return f;
}

AutMap compose(const AutMap& f, const AutMap& g) {
    require_compatible(f.cfg_, g.cfg_);
    HalfInt window = std::min(f.window_, g.window_);
    if (f.kind_ == AutMap::Kind::InnerExp && g.kind_ == AutMap::Kind::InnerExp) {
        // The generators commute and products of two ad I terms vanish, so
        // (id + A)(id + B) = id + A + B; merge factor lists.
        std::map<std::int64_t, Scalar> merged;
        for (const auto& list : {f.factors_, g.factors_})
            for (const auto& [alpha, k] : list) {
                auto it = merged.find(k);
                if (it == merged.end())
                    merged.emplace(k, alpha);
                else
                    it->second = it->second + alpha;
            }
        AutMap out(f.cfg_, window, AutMap::Kind::InnerExp);
        for (const auto& [k, alpha] : merged)
            if (!alpha.is_zero())
                out.factors_.push_back({alpha, k});
        out.materialize();
        return out;
    }
    AutMap out(f.cfg_, window, AutMap::Kind::Composite);
    out.left_ = std::make_shared<AutMap>(f);
    out.right_ = std::make_shared<AutMap>(g);
    out.materialize();
    return out;
}

SigmaParams sigma_inverse_params(const AlgebraConfig& cfg, const SigmaParams& p) {
    const ScalarMode& mode = cfg.mode;
    SigmaParams q;
    q.epsilon = p.epsilon;
    q.alpha = p.epsilon == 1 ? p.alpha.inverse() : p.alpha;
    q.mu = p.mu.inverse();
    q.beta = -(p.beta / p.mu);
    // x' = alpha^{(1-eps)s} / x
    std::int64_t xexp = (1 - p.epsilon) * cfg.s.twice / 2; // (1-eps)s is an integer
    q.x = p.alpha.pow(xexp) / p.x;
    // gamma' from the k = 0 block of the composite's G-image, j = (eps-1)s:
    // gamma' = -eps mu gamma x'/x - 2 j beta' x' mu
    std::int64_t j2 = (p.epsilon - 1) * cfg.s.twice; // twice j
    Scalar eps = Scalar::of(p.epsilon, mode);
    q.gamma = -(eps * p.mu * p.gamma * q.x / p.x) - Scalar::of(j2, mode) * q.beta * q.x * p.mu;
    return q;
}

AutMap invert(const AutMap& f) {
    switch (f.kind_) {
        case AutMap::Kind::InnerExp: {
            AutMap out(f.cfg_, f.window_, AutMap::Kind::InnerExp);
            for (const auto& [alpha, k] : f.factors_)
                out.factors_.push_back({-alpha, k});
            out.materialize();
            return out;
        }
        case AutMap::Kind::SigmaFamily:
            return make_sigma_unchecked(f.cfg_, sigma_inverse_params(f.cfg_, f.sigma_), f.window_);
        case AutMap::Kind::Composite:
            return compose(invert(*f.right_), invert(*f.left_));
    }
    fail(Errc::NotInvertibleOnWindow, "unreachable");
}

SigmaParams suggest_sigma_params(const AlgebraConfig& cfg, int epsilon, const Rational& alpha_root,
                                 const Rational& mu_root, bool negative_x, const Scalar& beta,
                                 const Scalar& gamma) {
    const ScalarMode& mode = cfg.mode;
    SigmaParams p;
    p.epsilon = epsilon;
    p.beta = beta;
    p.gamma = gamma;
    Rational m3 = mu_root * mu_root * mu_root;
    if (cfg.s.twice == 0) {
        p.alpha = Scalar::from_rational(alpha_root, mode);
        p.mu = Scalar::from_rational(mu_root * mu_root, mode);
        p.x = Scalar::from_rational(negative_x ? -m3 : m3, mode);
    } else {
        p.alpha = Scalar::from_rational(alpha_root * alpha_root, mode);
        p.mu = Scalar::from_rational(mu_root * mu_root, mode);
        Rational x = alpha_root * m3;
        p.x = Scalar::from_rational(negative_x ? -x : x, mode);
    }
    return p;
}

std::vector<HomViolation> verify_homomorphism(const AlgebraConfig& cfg, const AutMap& f,
                                              HalfInt window) {
    std::vector<HomViolation> out;
    auto basis = window_basis(cfg, window);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        // Parity preservation, per basis vector.
        const auto& b = basis[i];
        Element img = f.apply_basis(b);
        auto par = img.parity();
        if (!img.is_zero() && (!par || *par != b.parity()))
            out.push_back({b, b, Element::single(b, Scalar::one(cfg.mode)), img});
    }
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = i; j < basis.size(); ++j) {
            const auto& x = basis[i];
            const auto& y = basis[j];
            HalfInt sum = x.idx + y.idx;
            if (sum < -window || sum > window)
                continue;
            Element lhs = f.apply(bracket_basis(cfg, x, y));
            Element rhs = bracket(cfg, f.apply_basis(x), f.apply_basis(y));
            if (lhs != rhs)
                out.push_back({x, y, lhs, rhs});
        }
    }
    return out;
}

const SigmaConstraintReport::Line* SigmaConstraintReport::line(const std::string& name) const {
    for (const auto& l : lines)
        if (l.name == name)
            return &l;
    return nullptr;
}

SigmaConstraintReport check_sigma_constraints(const AlgebraConfig& cfg, const SigmaParams& p) {
    if (p.alpha.is_zero() || p.mu.is_zero())
        fail(Errc::ZeroParameter, "alpha and mu must be nonzero");
    const ScalarMode& mode = cfg.mode;
    SigmaConstraintReport report;
    auto add = [&](const std::string& name, bool pass) {
        report.lines.push_back({name, pass});
        report.all_pass = report.all_pass && pass;
    };
    auto d_H = [&](std::int64_t k) { return p.alpha.pow(k) * p.x; };
    auto c_G = [&](std::int64_t k) { return p.x / (p.mu * Scalar::of(p.epsilon, mode)) * p.alpha.pow(k); };
    auto d_G = [&](std::int64_t k) {
        return p.alpha.pow(k) * p.gamma + Scalar::of(2 * k, mode) * p.beta * p.alpha.pow(k) * p.x / p.mu;
    };

    bool dh_ok = true, cg_ok = true, dg_ok = true;
    for (std::int64_t k = -4; k <= 4; ++k) {
        dh_ok = dh_ok && d_H(k) == p.alpha.pow(k) * d_H(0);
        cg_ok = cg_ok && c_G(k) * p.mu * Scalar::of(p.epsilon, mode) == d_H(k);
        dg_ok = dg_ok && d_G(k) == p.alpha.pow(k) * d_G(0) + Scalar::of(2 * k * p.epsilon, mode) *
                                                                 p.alpha.pow(k) * p.beta * c_G(0);
    }
    add("dH_recurrence", dh_ok);
    add("cG_relation", cg_ok);
    add("x_squared", p.x * p.x == p.alpha.pow(cfg.s.twice) * p.mu.pow(3));

    Scalar lambda = Scalar::lambda(mode);
    add("lambda_mu", (lambda * (p.mu.inverse() - Scalar::one(mode))).is_zero());
    bool lambda_zero = lambda.is_zero();
    add("epsilon_condition", lambda_zero || (p.mu.is_one() && p.epsilon == 1));
    add("dG_recurrence", dg_ok);
    return report;
}

JDecomposition decompose_into_inner_group(const AlgebraConfig& cfg, const AutMap& f) {
    const ScalarMode& mode = cfg.mode;
    auto reject = [&](const BasisIndex& b) {
        fail(Errc::NotInJ, "image of " + b.to_string() + " is not of inner-exponential form");
    };
    // Quick structural screen before fitting.
    for (const auto& [b, img] : f.images()) {
        Element delta = img - Element::single(b, Scalar::one(mode));
        switch (b.fam) {
            case Family::I:
            case Family::H:
                if (!delta.is_zero())
                    reject(b);
                break;
            case Family::L:
                for (const auto& [t, c] : delta.terms())
                    if (t.fam != Family::I)
                        reject(b);
                break;
            case Family::G:
                for (const auto& [t, c] : delta.terms())
                    if (t.fam != Family::H)
                        reject(b);
                break;
        }
    }
    // Fit factors from the L-images: f(L_0) has alpha_k * k at I_k, and f(L_1)
    // exposes the k = 0 factor at I_1 with weight -alpha_0.
    BasisIndex l0{Family::L, HalfInt::whole(0)};
    BasisIndex l1{Family::L, HalfInt::whole(1)};
    if (!f.images().count(l0) || !f.images().count(l1))
        fail(Errc::NotInJ, "window too small to fit factors");
    std::map<std::int64_t, Scalar> fitted;
    Element d0 = f.images().at(l0) - Element::single(l0, Scalar::one(mode));
    for (const auto& [t, c] : d0.terms()) {
        std::int64_t k = t.idx.integer_value();
        if (k == 0)
            reject(l0); // ad I_0 cannot move L_0
        fitted.emplace(k, c / Scalar::of(k, mode));
    }
    Element d1 = f.images().at(l1) - Element::single(l1, Scalar::one(mode));
    if (const Scalar* c = d1.coeff({Family::I, HalfInt::whole(1)})) {
        Scalar alpha0 = -*c;
        if (!alpha0.is_zero())
            fitted.emplace(0, alpha0);
    }

    AutMap fit = identity_aut(cfg, f.window());
    for (const auto& [k, alpha] : fitted)
        fit = compose(fit, make_inner_exp(cfg, alpha, k, f.window()));
    for (const auto& [b, img] : f.images()) {
        if (!(img == fit.apply_basis(b)))
            reject(b);
    }
    JDecomposition out;
    for (const auto& [k, alpha] : fitted)
        out.factors.push_back({alpha, k});
    return out;
}

} // namespace wsuper
