#include "wsuper/linalg.hpp"

#include <algorithm>

namespace wsuper {

void Matrix::set(int r, int c, const Scalar& v) {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        fail(Errc::InvalidIndex, "matrix entry out of range");
    if (v.is_zero()) {
        entries_.erase({r, c});
        return;
    }
    if (!mode_)
        mode_ = v.mode();
    else if (*mode_ != v.mode())
        fail(Errc::ModeMismatch, "matrix entries mix scalar modes");
    entries_.insert_or_assign({r, c}, v);
}

const Scalar* Matrix::at(int r, int c) const {
    auto it = entries_.find({r, c});
    return it == entries_.end() ? nullptr : &it->second;
}

void axpy_sub(SparseVec& dst, const Scalar& c, const SparseVec& src) {
    SparseVec out;
    out.reserve(dst.size() + src.size());
    std::size_t i = 0, j = 0;
    while (i < dst.size() || j < src.size()) {
        if (j == src.size() || (i < dst.size() && dst[i].first < src[j].first)) {
            out.push_back(dst[i++]);
        } else if (i == dst.size() || src[j].first < dst[i].first) {
            out.push_back({src[j].first, -(c * src[j].second)});
            ++j;
        } else {
            Scalar v = dst[i].second - c * src[j].second;
            if (!v.is_zero())
                out.push_back({dst[i].first, std::move(v)});
            ++i;
            ++j;
        }
    }
    dst = std::move(out);
}

void RowReducer::insert(SparseVec row) {
    // Eliminate every pivot-column entry; pivot rows carry no other pivot columns,
    // so each subtraction only introduces non-pivot entries at columns further right.
    std::size_t i = 0;
    while (i < row.size()) {
        auto it = lead_to_row_.find(row[i].first);
        if (it == lead_to_row_.end()) {
            ++i;
            continue;
        }
        axpy_sub(row, row[i].second, rows_[it->second]);
    }
    if (row.empty())
        return;
    Scalar lead_inv = row.front().second.inverse();
    for (auto& [c, v] : row)
        v = v * lead_inv;
    int lead = row.front().first;
    for (auto& existing : rows_) {
        auto pos = std::lower_bound(existing.begin(), existing.end(), lead,
                                    [](const auto& e, int key) { return e.first < key; });
        if (pos != existing.end() && pos->first == lead)
            axpy_sub(existing, pos->second, row);
    }
    lead_to_row_.emplace(lead, rows_.size());
    rows_.push_back(std::move(row));
}

std::vector<int> RowReducer::pivot_cols() const {
    std::vector<int> out;
    out.reserve(lead_to_row_.size());
    for (const auto& [lead, idx] : lead_to_row_)
        out.push_back(lead);
    return out;
}

std::vector<SparseVec> RowReducer::echelon_rows() const {
    std::vector<SparseVec> out;
    out.reserve(rows_.size());
    for (const auto& [lead, idx] : lead_to_row_)
        out.push_back(rows_[idx]);
    return out;
}

RrefResult rref(const Matrix& m) {
    std::vector<SparseVec> rows(static_cast<std::size_t>(m.rows()));
    for (const auto& [rc, v] : m.entries())
        rows[static_cast<std::size_t>(rc.first)].push_back({rc.second, v});

    std::vector<int> pivots;
    std::size_t next_pivot_row = 0;
    for (int col = 0; col < m.cols() && next_pivot_row < rows.size(); ++col) {
        std::size_t found = rows.size();
        for (std::size_t r = next_pivot_row; r < rows.size(); ++r) {
            if (!rows[r].empty() && rows[r].front().first == col) {
                found = r;
                break;
            }
        }
        if (found == rows.size())
            continue;
        std::swap(rows[next_pivot_row], rows[found]);
        SparseVec& prow = rows[next_pivot_row];
        Scalar inv = prow.front().second.inverse();
        for (auto& [c, v] : prow)
            v = v * inv;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == next_pivot_row)
                continue;
            auto pos = std::lower_bound(rows[r].begin(), rows[r].end(), col,
                                        [](const auto& e, int key) { return e.first < key; });
            if (pos != rows[r].end() && pos->first == col)
                axpy_sub(rows[r], pos->second, prow);
        }
        pivots.push_back(col);
        ++next_pivot_row;
    }

    Matrix out(m.rows(), m.cols());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (const auto& [c, v] : rows[r])
            out.set(static_cast<int>(r), c, v);
    return {std::move(out), std::move(pivots)};
}

VectorSpaceBasis VectorSpaceBasis::from_sparse(int length, const std::vector<SparseVec>& vecs,
                                               const ScalarMode& mode) {
    RowReducer red(length);
    for (const auto& v : vecs)
        red.insert(v);
    VectorSpaceBasis out(length, mode);
    for (const auto& row : red.echelon_rows()) {
        std::vector<Scalar> dense(static_cast<std::size_t>(length), Scalar::zero(mode));
        for (const auto& [c, v] : row)
            dense[static_cast<std::size_t>(c)] = v;
        out.vectors_.push_back(std::move(dense));
    }
    return out;
}

VectorSpaceBasis VectorSpaceBasis::from_vectors(int length,
                                                const std::vector<std::vector<Scalar>>& vecs,
                                                const ScalarMode& mode) {
    std::vector<SparseVec> sparse;
    sparse.reserve(vecs.size());
    for (const auto& v : vecs) {
        if (static_cast<int>(v.size()) != length)
            fail(Errc::InvalidIndex, "vector length does not match basis length");
        SparseVec row;
        for (int c = 0; c < length; ++c)
            if (!v[static_cast<std::size_t>(c)].is_zero())
                row.push_back({c, v[static_cast<std::size_t>(c)]});
        sparse.push_back(std::move(row));
    }
    return from_sparse(length, sparse, mode);
}

VectorSpaceBasis nullspace(const Matrix& m) {
    ScalarMode mode = m.mode() ? *m.mode() : ScalarMode::symbolic();
    RowReducer red(m.cols());
    {
        std::vector<SparseVec> rows(static_cast<std::size_t>(m.rows()));
        for (const auto& [rc, v] : m.entries())
            rows[static_cast<std::size_t>(rc.first)].push_back({rc.second, v});
        for (auto& r : rows)
            red.insert(std::move(r));
    }
    auto pivots = red.pivot_cols();
    auto rows = red.echelon_rows();
    std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
    for (int p : pivots)
        is_pivot[static_cast<std::size_t>(p)] = true;

    std::vector<SparseVec> basis;
    for (int f = 0; f < m.cols(); ++f) {
        if (is_pivot[static_cast<std::size_t>(f)])
            continue;
        SparseVec v;
        // v[f] = 1, v[pivot] = -entry of the pivot row at column f.
        for (std::size_t r = 0; r < rows.size(); ++r) {
            auto pos = std::lower_bound(rows[r].begin(), rows[r].end(), f,
                                        [](const auto& e, int key) { return e.first < key; });
            if (pos != rows[r].end() && pos->first == f)
                v.push_back({pivots[r], -pos->second});
        }
        v.push_back({f, Scalar::one(mode)});
        std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        basis.push_back(std::move(v));
    }
    return VectorSpaceBasis::from_sparse(m.cols(), basis, mode);
}

RelativeRank relative_rank(const VectorSpaceBasis& sub, const VectorSpaceBasis& full) {
    if (sub.length() != full.length())
        fail(Errc::InvalidIndex, "relative_rank over different coordinate counts");
    RowReducer red(full.length());
    auto insert_all = [&](const VectorSpaceBasis& b) {
        for (const auto& v : b.vectors()) {
            SparseVec row;
            for (int c = 0; c < b.length(); ++c)
                if (!v[static_cast<std::size_t>(c)].is_zero())
                    row.push_back({c, v[static_cast<std::size_t>(c)]});
            red.insert(std::move(row));
        }
    };
    insert_all(full);
    int rank_full = red.rank();
    insert_all(sub);
    int rank_union = red.rank();
    if (rank_union > rank_full)
        fail(Errc::SubspaceNotContained,
             "sub has " + std::to_string(rank_union - rank_full) + " direction(s) outside full");
    return {sub.dim(), full.dim(), rank_full - sub.dim()};
}

} // namespace wsuper
