#pragma once

#include <map>

#include "wsuper/algebra.hpp"
#include "wsuper/linalg.hpp"

namespace wsuper {

// Degree-homogeneous linear map given by images of basis vectors on a window.
// For an even map, L/I sources land in span{L, I} and G/H sources in span{G, H}
// at the degree-shifted index; for an odd map the family pairs swap.
struct GradedMap {
    AlgebraConfig cfg;
    Parity map_parity;
    HalfInt degree;
    HalfInt window;
    std::map<BasisIndex, Element> images;

    bool defined(const BasisIndex& b) const { return images.count(b) != 0; }
    const Element& image(const BasisIndex& b) const;
    Element apply(const Element& e) const;
};

// One ansatz coefficient: the target-family component of the image of source.
struct UnknownLabel {
    BasisIndex source;
    Family target;
    friend auto operator<=>(const UnknownLabel&, const UnknownLabel&) = default;
    std::string to_string() const;
};

// Target families allowed by the grading/parity ansatz.
std::pair<Family, Family> ansatz_targets(Family source, Parity map_parity);

std::vector<UnknownLabel> ansatz_unknowns(const AlgebraConfig& cfg, Parity parity, HalfInt degree,
                                          HalfInt window);

// One row block per canonical bracket relation instance (x, y) whose indices,
// bracket index, and all degree shifts stay inside the window; rows express
// d([x,y]) - [d(x),y] - (-1)^{[d][x]}[x,d(y)] = 0 coordinate-wise.
Matrix assemble_leibniz_system(const AlgebraConfig& cfg, Parity parity, HalfInt degree,
                               HalfInt window);

struct DerivationSpace {
    AlgebraConfig cfg;
    Parity parity;
    HalfInt degree;
    HalfInt window;
    HalfInt interior;
    std::vector<UnknownLabel> unknowns;
    VectorSpaceBasis nullspace;  // solutions of the Leibniz system, full coordinates
    VectorSpaceBasis inner;      // span of ad L_r, ad I_r (even) / ad G_r, ad H_r (odd)
    std::vector<int> interior_cols;
    VectorSpaceBasis nullspace_interior;
    VectorSpaceBasis inner_interior;

    GradedMap materialize(const std::vector<Scalar>& full_coords) const;
    std::vector<Scalar> restrict_to_interior(const std::vector<Scalar>& full_coords) const;
};

DerivationSpace solve_derivation_space(const AlgebraConfig& cfg, Parity parity, HalfInt degree,
                                       HalfInt window, HalfInt interior);

enum class OuterLabel { d1, d2, d3, d4 };
const char* outer_label_name(OuterLabel l);
// d1, d2 live on s = 0; d3, d4 on s = 1/2. All are even of degree 0.
GradedMap canonical_outer(const AlgebraConfig& cfg, OuterLabel which, HalfInt window);
std::vector<OuterLabel> canonical_outer_labels(HalfInt s);

struct LeibnizViolation {
    BasisIndex x, y;
    Element lhs, rhs;
    std::string to_string() const;
};

std::vector<LeibnizViolation> verify_leibniz(const AlgebraConfig& cfg, const GradedMap& d,
                                             HalfInt window);

struct CellReport {
    Parity parity;
    HalfInt degree;
    int dim_nullspace_interior = 0;
    int dim_inner_interior = 0;
    int dim_outer = 0;
    std::vector<std::string> outer_labels;
};

struct ClassificationReport {
    AlgebraConfig cfg;
    HalfInt window;
    HalfInt interior;
    std::vector<CellReport> cells;

    const CellReport* cell(Parity p, HalfInt degree) const;
};

ClassificationReport classify(const AlgebraConfig& cfg, HalfInt degree_lo, HalfInt degree_hi,
                              const std::vector<Parity>& parities, HalfInt window,
                              HalfInt interior);

} // namespace wsuper
