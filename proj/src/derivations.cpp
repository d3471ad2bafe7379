#include "wsuper/derivations.hpp"

#include <algorithm>

namespace wsuper {

const Element& GradedMap::image(const BasisIndex& b) const {
    auto it = images.find(b);
    if (it == images.end())
        fail(Errc::InvalidIndex, "map has no image for " + b.to_string());
    return it->second;
}

Element GradedMap::apply(const Element& e) const {
    Element out;
    for (const auto& [b, c] : e.terms())
        out = out + image(b).scaled(c);
    return out;
}

std::string UnknownLabel::to_string() const {
    return std::string(family_name(target)) + "<-" + source.to_string();
}

std::pair<Family, Family> ansatz_targets(Family source, Parity map_parity) {
    bool even_source = family_parity(source) == Parity::Even;
    bool even_target = (map_parity == Parity::Even) == even_source;
    return even_target ? std::pair{Family::L, Family::I} : std::pair{Family::G, Family::H};
}

std::vector<UnknownLabel> ansatz_unknowns(const AlgebraConfig& cfg, Parity parity, HalfInt degree,
                                          HalfInt window) {
    std::vector<UnknownLabel> out;
    for (const BasisIndex& src : window_basis(cfg, window)) {
        HalfInt t = src.idx + degree;
        if (t < -window || t > window)
            continue;
        auto [f1, f2] = ansatz_targets(src.fam, parity);
        if (!cfg.index_valid({f1, t}))
            continue; // image lands in a zero graded component
        out.push_back({src, f1});
        out.push_back({src, f2});
    }
    return out;
}

namespace {

struct System {
    std::vector<UnknownLabel> unknowns;
    std::map<UnknownLabel, int> col_of;
};

System make_system(const AlgebraConfig& cfg, Parity parity, HalfInt degree, HalfInt window) {
    System sys;
    sys.unknowns = ansatz_unknowns(cfg, parity, degree, window);
    for (std::size_t i = 0; i < sys.unknowns.size(); ++i)
        sys.col_of.emplace(sys.unknowns[i], static_cast<int>(i));
    return sys;
}

constexpr std::pair<Family, Family> kCanonicalPairs[] = {
    {Family::L, Family::L}, {Family::L, Family::I}, {Family::L, Family::H},
    {Family::L, Family::G}, {Family::I, Family::G}, {Family::G, Family::G},
};

std::vector<HalfInt> family_indices(const AlgebraConfig& cfg, Family f, HalfInt window) {
    std::vector<HalfInt> out;
    for (const auto& b : window_basis(cfg, window))
        if (b.fam == f)
            out.push_back(b.idx);
    return out;
}

// Enumerate canonical bracket relation instances (x, y) with x, y, x+y in window.
// Same-family pairs are deduplicated; the (L,L) diagonal vanishes identically.
template <typename Fn>
void for_each_instance(const AlgebraConfig& cfg, HalfInt window, Fn&& fn) {
    for (auto [fa, fb] : kCanonicalPairs) {
        auto as = family_indices(cfg, fa, window);
        auto bs = family_indices(cfg, fb, window);
        for (HalfInt ia : as) {
            for (HalfInt ib : bs) {
                if (fa == fb) {
                    if (fa == Family::L && ia >= ib)
                        continue;
                    if (fa == Family::G && ia > ib)
                        continue;
                }
                HalfInt isum = ia + ib;
                if (isum < -window || isum > window)
                    continue;
                fn(BasisIndex{fa, ia}, BasisIndex{fb, ib});
            }
        }
    }
}

} // namespace

Matrix assemble_leibniz_system(const AlgebraConfig& cfg, Parity parity, HalfInt degree,
                               HalfInt window) {
    System sys = make_system(cfg, parity, degree, window);
    const int cols = static_cast<int>(sys.unknowns.size());
    std::vector<std::map<int, Scalar>> rows;

    auto shift_ok = [&](HalfInt i) { return i + degree >= -window && i + degree <= window; };
    auto has_unknowns = [&](const BasisIndex& b) {
        auto [f1, f2] = ansatz_targets(b.fam, parity);
        return sys.col_of.count({b, f1}) != 0;
    };

    for_each_instance(cfg, window, [&](const BasisIndex& x, const BasisIndex& y) {
        if (!shift_ok(x.idx) || !shift_ok(y.idx) || !shift_ok(x.idx + y.idx))
            return;
        if (!has_unknowns(x) || !has_unknowns(y))
            return;

        // target basis vector -> (column -> coefficient)
        std::map<BasisIndex, std::map<int, Scalar>> block;
        auto add = [&](const BasisIndex& target, int col, const Scalar& c) {
            if (c.is_zero())
                return;
            auto& cell = block[target];
            auto it = cell.find(col);
            if (it == cell.end())
                cell.emplace(col, c);
            else {
                it->second = it->second + c;
                if (it->second.is_zero())
                    cell.erase(it);
            }
        };

        // d([x,y]) term: images of the bracket result.
        Element br = bracket_basis(cfg, x, y);
        for (const auto& [b, cb] : br.terms()) {
            if (!has_unknowns(b))
                return; // instance references a source outside the ansatz
            auto [f1, f2] = ansatz_targets(b.fam, parity);
            for (Family tf : {f1, f2})
                add({tf, b.idx + degree}, sys.col_of.at({b, tf}), cb);
        }
        // -[d(x), y]
        {
            auto [f1, f2] = ansatz_targets(x.fam, parity);
            for (Family tf : {f1, f2}) {
                BasisIndex t{tf, x.idx + degree};
                int col = sys.col_of.at({x, tf});
                Element tb = bracket_basis(cfg, t, y);
                for (const auto& [b, c] : tb.terms())
                    add(b, col, -c);
            }
        }
        // -(-1)^{[d][x]} [x, d(y)]
        {
            bool flip = parity == Parity::Odd && x.parity() == Parity::Odd;
            auto [f1, f2] = ansatz_targets(y.fam, parity);
            for (Family tf : {f1, f2}) {
                BasisIndex t{tf, y.idx + degree};
                int col = sys.col_of.at({y, tf});
                Element xb = bracket_basis(cfg, x, t);
                for (const auto& [b, c] : xb.terms())
                    add(b, col, flip ? c : -c);
            }
        }

        for (auto& [target, cells] : block)
            if (!cells.empty())
                rows.push_back(std::move(cells));
    });

    Matrix m(static_cast<int>(rows.size()), cols);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (const auto& [c, v] : rows[r])
            m.set(static_cast<int>(r), c, v);
    return m;
}

namespace {

std::vector<std::vector<Scalar>> inner_generator_vectors(const AlgebraConfig& cfg, Parity parity,
                                                         HalfInt degree,
                                                         const std::vector<UnknownLabel>& unknowns) {
    std::vector<std::vector<Scalar>> out;
    auto fams = parity == Parity::Even ? std::pair{Family::L, Family::I}
                                       : std::pair{Family::G, Family::H};
    for (Family f : {fams.first, fams.second}) {
        BasisIndex gen{f, degree};
        if (!cfg.index_valid(gen))
            continue;
        std::vector<Scalar> v(unknowns.size(), Scalar::zero(cfg.mode));
        bool nonzero = false;
        for (std::size_t i = 0; i < unknowns.size(); ++i) {
            Element im = bracket_basis(cfg, gen, unknowns[i].source);
            if (const Scalar* c = im.coeff({unknowns[i].target, unknowns[i].source.idx + degree})) {
                v[i] = *c;
                nonzero = true;
            }
        }
        if (nonzero)
            out.push_back(std::move(v));
    }
    return out;
}

bool space_contains(const VectorSpaceBasis& space, const std::vector<Scalar>& v) {
    RowReducer red(space.length());
    auto to_sparse = [](const std::vector<Scalar>& w) {
        SparseVec row;
        for (int c = 0; c < static_cast<int>(w.size()); ++c)
            if (!w[static_cast<std::size_t>(c)].is_zero())
                row.push_back({c, w[static_cast<std::size_t>(c)]});
        return row;
    };
    for (const auto& w : space.vectors())
        red.insert(to_sparse(w));
    int before = red.rank();
    red.insert(to_sparse(v));
    return red.rank() == before;
}

} // namespace

std::vector<Scalar> DerivationSpace::restrict_to_interior(
    const std::vector<Scalar>& full_coords) const {
    std::vector<Scalar> out;
    out.reserve(interior_cols.size());
    for (int c : interior_cols)
        out.push_back(full_coords[static_cast<std::size_t>(c)]);
    return out;
}

GradedMap DerivationSpace::materialize(const std::vector<Scalar>& full_coords) const {
    GradedMap gm{cfg, parity, degree, window, {}};
    for (std::size_t i = 0; i < unknowns.size(); ++i) {
        auto& img = gm.images[unknowns[i].source]; // zero images stay defined
        img.add_term({unknowns[i].target, unknowns[i].source.idx + degree}, full_coords[i]);
    }
    return gm;
}

DerivationSpace solve_derivation_space(const AlgebraConfig& cfg, Parity parity, HalfInt degree,
                                       HalfInt window, HalfInt interior) {
    if (interior.twice > window.twice - 4)
        fail(Errc::InteriorTooLarge, "interior " + interior.to_string() +
                                         " too close to window " + window.to_string() +
                                         " (need interior <= window - 2)");
    Matrix sys = assemble_leibniz_system(cfg, parity, degree, window);
    auto unknowns = ansatz_unknowns(cfg, parity, degree, window);
    VectorSpaceBasis null = nullspace(sys);
    VectorSpaceBasis inner = VectorSpaceBasis::from_vectors(
        static_cast<int>(unknowns.size()),
        inner_generator_vectors(cfg, parity, degree, unknowns), cfg.mode);

    std::vector<int> interior_cols;
    for (std::size_t i = 0; i < unknowns.size(); ++i)
        if (unknowns[i].source.idx.abs() <= interior)
            interior_cols.push_back(static_cast<int>(i));

    auto restrict_basis = [&](const VectorSpaceBasis& b) {
        std::vector<std::vector<Scalar>> vecs;
        for (const auto& v : b.vectors()) {
            std::vector<Scalar> w;
            w.reserve(interior_cols.size());
            for (int c : interior_cols)
                w.push_back(v[static_cast<std::size_t>(c)]);
            vecs.push_back(std::move(w));
        }
        return VectorSpaceBasis::from_vectors(static_cast<int>(interior_cols.size()), vecs,
                                              cfg.mode);
    };

    DerivationSpace out{cfg,
                        parity,
                        degree,
                        window,
                        interior,
                        unknowns,
                        null,
                        inner,
                        interior_cols,
                        restrict_basis(null),
                        restrict_basis(inner)};
    return out;
}

const char* outer_label_name(OuterLabel l) {
    switch (l) {
        case OuterLabel::d1: return "d1";
        case OuterLabel::d2: return "d2";
        case OuterLabel::d3: return "d3";
        case OuterLabel::d4: return "d4";
    }
    return "?";
}

std::vector<OuterLabel> canonical_outer_labels(HalfInt s) {
    if (s.twice == 0)
        return {OuterLabel::d1, OuterLabel::d2};
    return {OuterLabel::d3, OuterLabel::d4};
}

GradedMap canonical_outer(const AlgebraConfig& cfg, OuterLabel which, HalfInt window) {
    bool wants_half = which == OuterLabel::d3 || which == OuterLabel::d4;
    if (wants_half != (cfg.s.twice == 1))
        fail(Errc::InvalidForS, std::string(outer_label_name(which)) + " requires s = " +
                                    (wants_half ? "1/2" : "0"));
    GradedMap gm{cfg, Parity::Even, HalfInt(0), window, {}};
    bool diagonal = which == OuterLabel::d1 || which == OuterLabel::d3;
    for (const BasisIndex& b : window_basis(cfg, window)) {
        Element img;
        if (diagonal) {
            // L -> 0, I -> 2I, G -> G, H -> 3H
            switch (b.fam) {
                case Family::L: break;
                case Family::I: img.add_term(b, Scalar::of(2, cfg.mode)); break;
                case Family::G: img.add_term(b, Scalar::one(cfg.mode)); break;
                case Family::H: img.add_term(b, Scalar::of(3, cfg.mode)); break;
            }
        } else if (b.fam == Family::G) {
            img.add_term({Family::H, b.idx}, Scalar::one(cfg.mode));
        }
        gm.images.emplace(b, std::move(img));
    }
    return gm;
}

std::string LeibnizViolation::to_string() const {
    return "(" + x.to_string() + ", " + y.to_string() + ")";
}

std::vector<LeibnizViolation> verify_leibniz(const AlgebraConfig& cfg, const GradedMap& d,
                                             HalfInt window) {
    std::vector<LeibnizViolation> out;
    for_each_instance(cfg, window, [&](const BasisIndex& x, const BasisIndex& y) {
        if (!d.defined(x) || !d.defined(y))
            return;
        Element br = bracket_basis(cfg, x, y);
        for (const auto& [b, c] : br.terms())
            if (!d.defined(b))
                return;
        Element lhs = d.apply(br);
        bool flip = d.map_parity == Parity::Odd && x.parity() == Parity::Odd;
        Element ex = Element::single(x, Scalar::one(cfg.mode));
        Element ey = Element::single(y, Scalar::one(cfg.mode));
        Element second = bracket(cfg, ex, d.image(y));
        Element rhs = bracket(cfg, d.image(x), ey) + (flip ? -second : second);
        if (lhs != rhs)
            out.push_back({x, y, lhs, rhs});
    });
    return out;
}

const CellReport* ClassificationReport::cell(Parity p, HalfInt degree) const {
    for (const auto& c : cells)
        if (c.parity == p && c.degree == degree)
            return &c;
    return nullptr;
}

ClassificationReport classify(const AlgebraConfig& cfg, HalfInt degree_lo, HalfInt degree_hi,
                              const std::vector<Parity>& parities, HalfInt window,
                              HalfInt interior) {
    ClassificationReport report{cfg, window, interior, {}};
    HalfInt step = cfg.s.twice == 1 ? HalfInt(1) : HalfInt::whole(1);
    for (Parity parity : parities) {
        for (HalfInt deg = degree_lo; deg <= degree_hi; deg = deg + step) {
            if (cfg.s.twice == 0 && !deg.is_integer())
                continue; // not a degree of the Z_s-grading
            DerivationSpace space = solve_derivation_space(cfg, parity, deg, window, interior);
            RelativeRank rr = relative_rank(space.inner_interior, space.nullspace_interior);
            CellReport cell;
            cell.parity = parity;
            cell.degree = deg;
            cell.dim_nullspace_interior = space.nullspace_interior.dim();
            cell.dim_inner_interior = space.inner_interior.dim();
            cell.dim_outer = rr.dim_quotient;

            if (cell.dim_outer > 0) {
                // Match quotient directions against the canonical outer derivations.
                std::vector<std::vector<Scalar>> spanning = space.inner_interior.vectors();
                int matched_rank = space.inner_interior.dim();
                if (parity == Parity::Even && deg == HalfInt(0)) {
                    for (OuterLabel label : canonical_outer_labels(cfg.s)) {
                        GradedMap outer = canonical_outer(cfg, label, window);
                        std::vector<Scalar> full(space.unknowns.size(), Scalar::zero(cfg.mode));
                        for (std::size_t i = 0; i < space.unknowns.size(); ++i) {
                            const auto& u = space.unknowns[i];
                            if (const Scalar* c = outer.image(u.source).coeff({u.target, u.source.idx}))
                                full[i] = *c;
                        }
                        auto vec = space.restrict_to_interior(full);
                        if (!space_contains(space.nullspace_interior, vec))
                            continue; // not a derivation at this lambda
                        auto trial = spanning;
                        trial.push_back(vec);
                        VectorSpaceBasis grown = VectorSpaceBasis::from_vectors(
                            static_cast<int>(space.interior_cols.size()), trial, cfg.mode);
                        if (grown.dim() == matched_rank + 1) {
                            spanning.push_back(vec);
                            matched_rank += 1;
                            cell.outer_labels.push_back(outer_label_name(label));
                        }
                    }
                }
                int unidentified = cell.dim_outer - static_cast<int>(cell.outer_labels.size());
                for (int i = 0; i < unidentified; ++i)
                    cell.outer_labels.push_back("unidentified");
            }
            report.cells.push_back(std::move(cell));
        }
    }
    return report;
}

} // namespace wsuper
