#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wsuper/linalg.hpp"

using namespace wsuper;

namespace {

const ScalarMode kSym = ScalarMode::symbolic();

Matrix from_rows(const std::vector<std::vector<long>>& rows, const ScalarMode& mode) {
    Matrix m(static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows[0].size()));
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < rows[r].size(); ++c)
            m.set(static_cast<int>(r), static_cast<int>(c), Scalar::of(rows[r][c], mode));
    return m;
}

Scalar entry(const Matrix& m, int r, int c, const ScalarMode& mode) {
    const Scalar* p = m.at(r, c);
    return p ? *p : Scalar::zero(mode);
}

bool matrix_equal(const Matrix& a, const Matrix& b) {
    return a.rows() == b.rows() && a.cols() == b.cols() && a.entries() == b.entries();
}

struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed ^ 0x9e3779b97f4a7c15ULL) {}
    std::uint64_t next() {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return state >> 33;
    }
};

} // namespace

TEST_CASE("rref examples") {
    auto r1 = rref(from_rows({{2, 4}, {1, 2}}, kSym));
    CHECK(matrix_equal(r1.m, from_rows({{1, 2}, {0, 0}}, kSym)));
    CHECK(r1.pivots == std::vector<int>{0});

    auto r2 = rref(from_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, kSym));
    CHECK(matrix_equal(r2.m, from_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, kSym)));
    CHECK(r2.pivots == std::vector<int>{0, 1, 2});

    // [[l, 1], [0, l]] row-reduces to the identity: l is invertible symbolically.
    Matrix m(2, 2);
    Scalar l = Scalar::lambda(kSym);
    m.set(0, 0, l);
    m.set(0, 1, Scalar::one(kSym));
    m.set(1, 1, l);
    auto r3 = rref(m);
    CHECK(matrix_equal(r3.m, from_rows({{1, 0}, {0, 1}}, kSym)));
    CHECK(r3.pivots == std::vector<int>{0, 1});
}

TEST_CASE("rref is idempotent and deterministic") {
    Matrix m = from_rows({{0, 2, 4}, {1, 1, 1}, {1, 3, 5}, {2, 4, 6}}, kSym);
    auto r1 = rref(m);
    auto r2 = rref(r1.m);
    CHECK(matrix_equal(r1.m, r2.m));
    CHECK(r1.pivots == r2.pivots);
    auto r3 = rref(m);
    CHECK(matrix_equal(r1.m, r3.m));
}

TEST_CASE("nullspace examples") {
    // [[1, 1]] -> one vector, canonical form (1, -1)
    auto n1 = nullspace(from_rows({{1, 1}}, kSym));
    CHECK(n1.dim() == 1);
    CHECK(n1.vectors()[0][0] == Scalar::one(kSym));
    CHECK(n1.vectors()[0][1] == -Scalar::one(kSym));

    CHECK(nullspace(from_rows({{1, 0}, {0, 1}}, kSym)).dim() == 0);

    auto n3 = nullspace(from_rows({{1, 2, 3}}, kSym));
    CHECK(n3.dim() == 2);
}

TEST_CASE("nullspace vectors satisfy m v = 0 and rank-nullity") {
    Rng rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        int rows = 1 + static_cast<int>(rng.next() % 6);
        int cols = 1 + static_cast<int>(rng.next() % 7);
        Matrix m(rows, cols);
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c)
                if (rng.next() % 3 == 0)
                    m.set(r, c, Scalar::of(static_cast<long>(rng.next() % 9) - 4, kSym));
        auto rr = rref(m);
        auto ns = nullspace(m);
        CHECK(static_cast<int>(rr.pivots.size()) + ns.dim() == cols);
        for (const auto& v : ns.vectors()) {
            for (int r = 0; r < rows; ++r) {
                Scalar acc = Scalar::zero(kSym);
                for (int c = 0; c < cols; ++c)
                    acc = acc + entry(m, r, c, kSym) * v[static_cast<std::size_t>(c)];
                CHECK(acc.is_zero());
            }
        }
    }
}

TEST_CASE("relative rank") {
    auto e1 = std::vector<Scalar>{Scalar::one(kSym), Scalar::zero(kSym)};
    auto e2 = std::vector<Scalar>{Scalar::zero(kSym), Scalar::one(kSym)};
    auto e12 = std::vector<Scalar>{Scalar::one(kSym), Scalar::one(kSym)};

    auto sub = VectorSpaceBasis::from_vectors(2, {e1}, kSym);
    auto full = VectorSpaceBasis::from_vectors(2, {e1, e2}, kSym);
    auto rr = relative_rank(sub, full);
    CHECK(rr.dim_sub == 1);
    CHECK(rr.dim_full == 2);
    CHECK(rr.dim_quotient == 1);

    auto same = relative_rank(full, full);
    CHECK(same.dim_quotient == 0);

    auto diag = VectorSpaceBasis::from_vectors(2, {e12}, kSym);
    auto only1 = VectorSpaceBasis::from_vectors(2, {e1}, kSym);
    CHECK_THROWS_AS(relative_rank(diag, only1), AlgebraError);
    try {
        relative_rank(diag, only1);
    } catch (const AlgebraError& e) {
        CHECK(e.code() == Errc::SubspaceNotContained);
    }
}

TEST_CASE("basis canonicalization is order-independent") {
    auto v1 = std::vector<Scalar>{Scalar::of(2, kSym), Scalar::of(4, kSym), Scalar::zero(kSym)};
    auto v2 = std::vector<Scalar>{Scalar::of(1, kSym), Scalar::of(2, kSym), Scalar::of(1, kSym)};
    auto a = VectorSpaceBasis::from_vectors(3, {v1, v2}, kSym);
    auto b = VectorSpaceBasis::from_vectors(3, {v2, v1}, kSym);
    CHECK(a == b);
    CHECK(a.dim() == 2);
}

TEST_CASE("mode mismatch is rejected") {
    Matrix m(1, 2);
    m.set(0, 0, Scalar::one(kSym));
    CHECK_THROWS_AS(m.set(0, 1, Scalar::one(ScalarMode::specialized(Rational(0)))), AlgebraError);
}
