#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "wsuper/scalar.hpp"

namespace wsuper {

// Sparse exact matrix; no stored zeros; all entries share one ScalarMode.
class Matrix {
public:
    Matrix(int rows, int cols) : rows_(rows), cols_(cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    void set(int r, int c, const Scalar& v);
    const Scalar* at(int r, int c) const;
    const std::map<std::pair<int, int>, Scalar>& entries() const { return entries_; }
    const std::optional<ScalarMode>& mode() const { return mode_; }

private:
    int rows_;
    int cols_;
    std::optional<ScalarMode> mode_;
    std::map<std::pair<int, int>, Scalar> entries_;
};

// Sparse row: (column, value) sorted by column, values nonzero.
using SparseVec = std::vector<std::pair<int, Scalar>>;

// dst -= c * src
void axpy_sub(SparseVec& dst, const Scalar& c, const SparseVec& src);

// Incrementally maintained reduced row echelon basis of the inserted row space.
// Deterministic: the result is the unique RREF of the span, independent of order.
class RowReducer {
public:
    explicit RowReducer(int cols) : cols_(cols) {}

    void insert(SparseVec row);
    int rank() const { return static_cast<int>(rows_.size()); }
    std::vector<int> pivot_cols() const;
    // Rows sorted by pivot column; each normalized to leading 1 and mutually reduced.
    std::vector<SparseVec> echelon_rows() const;

private:
    int cols_;
    std::map<int, std::size_t> lead_to_row_;
    std::vector<SparseVec> rows_;
};

struct RrefResult {
    Matrix m;
    std::vector<int> pivots;
};

// Textbook reduced row echelon form; pivot = first row with a nonzero entry in the
// leftmost unresolved column.
RrefResult rref(const Matrix& m);

// Canonical subspace representation: vectors are the RREF rows of the span.
class VectorSpaceBasis {
public:
    static VectorSpaceBasis from_vectors(int length, const std::vector<std::vector<Scalar>>& vecs,
                                         const ScalarMode& mode);
    static VectorSpaceBasis from_sparse(int length, const std::vector<SparseVec>& vecs,
                                        const ScalarMode& mode);

    int length() const { return length_; }
    int dim() const { return static_cast<int>(vectors_.size()); }
    const std::vector<std::vector<Scalar>>& vectors() const { return vectors_; }
    const ScalarMode& mode() const { return mode_; }
    friend bool operator==(const VectorSpaceBasis& a, const VectorSpaceBasis& b) {
        return a.length_ == b.length_ && a.vectors_ == b.vectors_;
    }

private:
    VectorSpaceBasis(int length, ScalarMode mode) : length_(length), mode_(std::move(mode)) {}
    int length_;
    ScalarMode mode_;
    std::vector<std::vector<Scalar>> vectors_;
};

VectorSpaceBasis nullspace(const Matrix& m);

struct RelativeRank {
    int dim_sub;
    int dim_full;
    int dim_quotient;
};

// Throws SubspaceNotContained when span(sub) is not inside span(full).
RelativeRank relative_rank(const VectorSpaceBasis& sub, const VectorSpaceBasis& full);

} // namespace wsuper
