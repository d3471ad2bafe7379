#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "wsuper/halfint.hpp"
#include "wsuper/scalar.hpp"

namespace wsuper {

// Generator families of the deformative super W-algebra: L, I even; G, H odd.
enum class Family : std::uint8_t { L, I, G, H };

enum class Parity : std::uint8_t { Even, Odd };

inline Parity family_parity(Family f) {
    return (f == Family::L || f == Family::I) ? Parity::Even : Parity::Odd;
}
inline Parity operator+(Parity a, Parity b) {
    return (a == b) ? Parity::Even : Parity::Odd;
}
const char* family_name(Family f);
const char* parity_name(Parity p);

struct BasisIndex {
    Family fam;
    HalfInt idx;

    friend constexpr auto operator<=>(const BasisIndex&, const BasisIndex&) = default;
    Parity parity() const { return family_parity(fam); }
    std::string to_string() const;
};

struct AlgebraConfig {
    HalfInt s;       // 0 or 1/2
    ScalarMode mode; // lambda handling shared by the whole computation

    AlgebraConfig(HalfInt s_, ScalarMode mode_);

    // L, I carry integer indices; G, H carry indices in s + Z.
    bool index_valid(const BasisIndex& b) const;
    void require_valid(const BasisIndex& b) const;
    bool degree_valid(HalfInt d) const { return (d - s).is_integer() || d.is_integer(); }
    std::string s_string() const { return s.to_string(); }
};

inline void require_compatible(const AlgebraConfig& a, const AlgebraConfig& b) {
    if (a.s != b.s || a.mode != b.mode)
        fail(Errc::ConfigMismatch, "algebra configurations differ");
}

// Finite linear combination of basis vectors; sorted by (family, index), no zero terms.
class Element {
public:
    using Term = std::pair<BasisIndex, Scalar>;

    Element() = default;
    static Element single(BasisIndex b, Scalar c);

    bool is_zero() const { return terms_.empty(); }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    const Scalar* coeff(const BasisIndex& b) const;

    void add_term(const BasisIndex& b, const Scalar& c);
    friend Element operator+(const Element& a, const Element& b);
    friend Element operator-(const Element& a, const Element& b);
    Element operator-() const;
    Element scaled(const Scalar& c) const;
    friend bool operator==(const Element& a, const Element& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }

    // Common parity/degree of all terms; nullopt when mixed or zero.
    std::optional<Parity> parity() const;
    std::optional<HalfInt> degree() const;

private:
    std::vector<Term> terms_;
};

// The six structure relations, extended to every ordered pair by super skew-symmetry;
// unlisted family pairs vanish. Exact for arbitrary indices.
Element bracket_basis(const AlgebraConfig& cfg, const BasisIndex& a, const BasisIndex& b);
Element bracket(const AlgebraConfig& cfg, const Element& x, const Element& y);
// ad x (y) = [x, y]; x must be parity-homogeneous.
Element ad_apply(const AlgebraConfig& cfg, const Element& x, const Element& y);

// All valid basis indices with |index| <= window, family-major then index ascending.
std::vector<BasisIndex> window_basis(const AlgebraConfig& cfg, HalfInt window);

struct AxiomViolation {
    std::string rule;
    std::vector<BasisIndex> where;
    Element defect;
    std::string to_string() const;
};

std::vector<AxiomViolation> check_super_skew(const AlgebraConfig& cfg, HalfInt window);
std::vector<AxiomViolation> check_super_jacobi(const AlgebraConfig& cfg, HalfInt window);

} // namespace wsuper
