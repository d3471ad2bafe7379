#include "wsuper/algebra.hpp"

#include <algorithm>

namespace wsuper {

const char* family_name(Family f) {
    switch (f) {
        case Family::L: return "L";
        case Family::I: return "I";
        case Family::G: return "G";
        case Family::H: return "H";
    }
    return "?";
}

const char* parity_name(Parity p) { return p == Parity::Even ? "even" : "odd"; }

std::string BasisIndex::to_string() const {
    return std::string(family_name(fam)) + "[" + idx.to_string() + "]";
}

AlgebraConfig::AlgebraConfig(HalfInt s_, ScalarMode mode_) : s(s_), mode(std::move(mode_)) {
    if (s.twice != 0 && s.twice != 1)
        fail(Errc::InvalidIndex, "s must be 0 or 1/2, got " + s.to_string());
}

bool AlgebraConfig::index_valid(const BasisIndex& b) const {
    if (b.fam == Family::L || b.fam == Family::I)
        return b.idx.is_integer();
    return (b.idx - s).is_integer();
}

void AlgebraConfig::require_valid(const BasisIndex& b) const {
    if (!index_valid(b))
        fail(Errc::InvalidIndex, b.to_string() + " is not a basis index for s = " + s.to_string());
}

Element Element::single(BasisIndex b, Scalar c) {
    Element e;
    e.add_term(b, c);
    return e;
}

const Scalar* Element::coeff(const BasisIndex& b) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), b,
                               [](const Term& t, const BasisIndex& key) { return t.first < key; });
    if (it != terms_.end() && it->first == b)
        return &it->second;
    return nullptr;
}

void Element::add_term(const BasisIndex& b, const Scalar& c) {
    if (c.is_zero())
        return;
    if (!terms_.empty() && c.mode() != terms_.front().second.mode())
        fail(Errc::ModeMismatch, "element mixes scalar modes");
    auto it = std::lower_bound(terms_.begin(), terms_.end(), b,
                               [](const Term& t, const BasisIndex& key) { return t.first < key; });
    if (it != terms_.end() && it->first == b) {
        Scalar sum = it->second + c;
        if (sum.is_zero())
            terms_.erase(it);
        else
            it->second = std::move(sum);
    } else {
        terms_.insert(it, {b, c});
    }
}

Element operator+(const Element& a, const Element& b) {
    Element out = a;
    for (const auto& [idx, c] : b.terms_)
        out.add_term(idx, c);
    return out;
}

Element operator-(const Element& a, const Element& b) {
    Element out = a;
    for (const auto& [idx, c] : b.terms_)
        out.add_term(idx, -c);
    return out;
}

Element Element::operator-() const {
    Element out;
    out.terms_.reserve(terms_.size());
    for (const auto& [idx, c] : terms_)
        out.terms_.push_back({idx, -c});
    return out;
}

Element Element::scaled(const Scalar& c) const {
    Element out;
    if (c.is_zero())
        return out;
    out.terms_.reserve(terms_.size());
    for (const auto& [idx, v] : terms_)
        out.terms_.push_back({idx, v * c});
    return out;
}

std::optional<Parity> Element::parity() const {
    if (terms_.empty())
        return std::nullopt;
    Parity p = terms_.front().first.parity();
    for (const auto& [idx, c] : terms_)
        if (idx.parity() != p)
            return std::nullopt;
    return p;
}

std::optional<HalfInt> Element::degree() const {
    if (terms_.empty())
        return std::nullopt;
    HalfInt d = terms_.front().first.idx;
    for (const auto& [idx, c] : terms_)
        if (idx.idx != d)
            return std::nullopt;
    return d;
}

namespace {

Scalar half_of(HalfInt h, const ScalarMode& m) {
    return Scalar::from_rational(Rational::from_halfint(h), m);
}

// The canonical table: ordered pairs (L,L), (L,I), (L,H), (L,G), (I,G), (G,G).
// Returns nullopt when (fa, fb) is not one of the canonical orders.
std::optional<Element> bracket_table(const AlgebraConfig& cfg, const BasisIndex& a,
                                     const BasisIndex& b) {
    const ScalarMode& mode = cfg.mode;
    const HalfInt m = a.idx, n = b.idx;
    Element out;
    if (a.fam == Family::L && b.fam == Family::L) {
        out.add_term({Family::L, m + n}, half_of(m - n, mode));
        return out;
    }
    if (a.fam == Family::L && b.fam == Family::I) {
        out.add_term({Family::I, m + n}, half_of(m - n, mode));
        return out;
    }
    if (a.fam == Family::L && b.fam == Family::H) {
        // [L_m, H_p] = (m/2 - p) H_{p+m}
        Scalar c = Scalar::from_rational(Rational(m.twice, 4) - Rational::from_halfint(n), mode);
        out.add_term({Family::H, m + n}, c);
        return out;
    }
    if (a.fam == Family::L && b.fam == Family::G) {
        // [L_m, G_p] = (m/2 - p) G_{p+m} + lambda (m+1) H_{m+p}
        Scalar cg = Scalar::from_rational(Rational(m.twice, 4) - Rational::from_halfint(n), mode);
        out.add_term({Family::G, m + n}, cg);
        Scalar ch = Scalar::lambda(mode) * Scalar::of(m.integer_value() + 1, mode);
        out.add_term({Family::H, m + n}, ch);
        return out;
    }
    if (a.fam == Family::I && b.fam == Family::G) {
        // [I_m, G_p] = (m - 2p) H_{p+m}
        Scalar c = half_of(m - n - n, mode);
        out.add_term({Family::H, m + n}, c);
        return out;
    }
    if (a.fam == Family::G && b.fam == Family::G) {
        out.add_term({Family::I, m + n}, Scalar::one(mode));
        return out;
    }
    return std::nullopt;
}

} // namespace

Element bracket_basis(const AlgebraConfig& cfg, const BasisIndex& a, const BasisIndex& b) {
    cfg.require_valid(a);
    cfg.require_valid(b);
    if (auto e = bracket_table(cfg, a, b))
        return *e;
    if (auto e = bracket_table(cfg, b, a)) {
        // [a, b] = -(-1)^{|a||b|} [b, a]
        bool both_odd = a.parity() == Parity::Odd && b.parity() == Parity::Odd;
        return both_odd ? *e : -*e;
    }
    return Element();
}

Element bracket(const AlgebraConfig& cfg, const Element& x, const Element& y) {
    Element out;
    for (const auto& [bx, cx] : x.terms())
        for (const auto& [by, cy] : y.terms())
            out = out + bracket_basis(cfg, bx, by).scaled(cx * cy);
    return out;
}

Element ad_apply(const AlgebraConfig& cfg, const Element& x, const Element& y) {
    if (!x.is_zero() && !x.parity().has_value())
        fail(Errc::ParityError, "ad requires a parity-homogeneous element");
    return bracket(cfg, x, y);
}

std::vector<BasisIndex> window_basis(const AlgebraConfig& cfg, HalfInt window) {
    std::vector<BasisIndex> out;
    for (Family f : {Family::L, Family::I, Family::G, Family::H}) {
        HalfInt lo = -window, hi = window;
        HalfInt start = lo;
        if (f == Family::L || f == Family::I) {
            if (!start.is_integer())
                start = HalfInt(start.twice + 1);
        } else {
            if (!(start - cfg.s).is_integer())
                start = HalfInt(start.twice + 1);
        }
        for (HalfInt i = start; i <= hi; i = i + HalfInt::whole(1))
            out.push_back({f, i});
    }
    return out;
}

std::string AxiomViolation::to_string() const {
    std::string s = rule + " at (";
    for (std::size_t i = 0; i < where.size(); ++i) {
        if (i)
            s += ", ";
        s += where[i].to_string();
    }
    s += ")";
    return s;
}

std::vector<AxiomViolation> check_super_skew(const AlgebraConfig& cfg, HalfInt window) {
    std::vector<AxiomViolation> out;
    auto basis = window_basis(cfg, window);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = i; j < basis.size(); ++j) {
            const auto& a = basis[i];
            const auto& b = basis[j];
            Element lhs = bracket_basis(cfg, a, b);
            Element rhs = bracket_basis(cfg, b, a);
            bool both_odd = a.parity() == Parity::Odd && b.parity() == Parity::Odd;
            Element defect = both_odd ? lhs - rhs : lhs + rhs;
            if (!defect.is_zero())
                out.push_back({"super-skew", {a, b}, defect});
        }
    }
    return out;
}

std::vector<AxiomViolation> check_super_jacobi(const AlgebraConfig& cfg, HalfInt window) {
    std::vector<AxiomViolation> out;
    auto basis = window_basis(cfg, window);
    const ScalarMode& mode = cfg.mode;
    Scalar minus_one = -Scalar::one(mode);
    auto sign = [&](const BasisIndex& a, const BasisIndex& b) {
        bool both_odd = a.parity() == Parity::Odd && b.parity() == Parity::Odd;
        return both_odd ? minus_one : Scalar::one(mode);
    };
    // (-1)^{|x||z|}[x,[y,z]] + (-1)^{|y||x|}[y,[z,x]] + (-1)^{|z||y|}[z,[x,y]] = 0.
    // Skew (checked separately) makes the identity permutation-invariant, so
    // unordered triples with repetition are exhaustive.
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = i; j < basis.size(); ++j) {
            for (std::size_t k = j; k < basis.size(); ++k) {
                const auto& x = basis[i];
                const auto& y = basis[j];
                const auto& z = basis[k];
                Element t1 = bracket(cfg, Element::single(x, sign(x, z)), bracket_basis(cfg, y, z));
                Element t2 = bracket(cfg, Element::single(y, sign(y, x)), bracket_basis(cfg, z, x));
                Element t3 = bracket(cfg, Element::single(z, sign(z, y)), bracket_basis(cfg, x, y));
                Element defect = t1 + t2 + t3;
                if (!defect.is_zero())
                    out.push_back({"super-jacobi", {x, y, z}, defect});
            }
        }
    }
    return out;
}

} // namespace wsuper
