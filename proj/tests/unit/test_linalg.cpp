#include "doctest.h"
#include "kitaev/error.hpp"
#include "kitaev/linalg.hpp"

#include <random>

using namespace kitaev;

namespace {

SparseMatrix dense(const std::vector<std::vector<int>>& rows) {
    std::vector<Vec> d;
    for (const auto& r : rows) {
        Vec v;
        for (int x : r) v.emplace_back(x);
        d.push_back(v);
    }
    return SparseMatrix::from_dense(d);
}

// [I_r ; X] * [I_r  Y] has rank exactly r.
SparseMatrix known_rank(std::mt19937& rng, std::size_t rows, std::size_t cols, std::size_t r) {
    if (r == 0) return SparseMatrix(rows, cols);
    std::uniform_int_distribution<int> d(-3, 3);
    std::vector<Vec> u(rows, zero_vec(r)), v(r, zero_vec(cols));
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < r; ++j) u[i][j] = i < r ? Rational(i == j) : Rational(d(rng), 1 + (d(rng) + 3) % 3);
    }
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < cols; ++j) v[i][j] = j < r ? Rational(i == j) : Rational(d(rng));
    }
    return SparseMatrix::from_dense(u) * SparseMatrix::from_dense(v);
}

}  // namespace

TEST_CASE("sparse vectors drop zeros and stay sorted") {
    SparseVec y{{1, Rational(2)}, {4, Rational(1)}};
    axpy(y, Rational(-2), SparseVec{{1, Rational(1)}, {3, Rational(1, 2)}});
    CHECK(y == SparseVec{{3, Rational(-1)}, {4, Rational(1)}});
    CHECK(to_dense(y, 5) == Vec{0, 0, 0, -1, 1});
    SparseAccumulator acc;
    acc.add(2, Rational(1, 3));
    acc.add(0, Rational(1));
    acc.add(2, Rational(-1, 3));
    CHECK(acc.finish() == SparseVec{{0, Rational(1)}});
}

TEST_CASE("products, kron and trace") {
    SparseMatrix a = dense({{1, 2}, {3, 4}});
    SparseMatrix b = dense({{0, 1}, {1, 0}});
    CHECK(a * b == dense({{2, 1}, {4, 3}}));
    CHECK((a + b) - b == a);
    CHECK(a.transpose() == dense({{1, 3}, {2, 4}}));
    SparseMatrix k = kron(a, b);
    // Block (i, j) of kron(a, b) is a(i, j) * b.
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t p = 0; p < 2; ++p)
                for (std::size_t q = 0; q < 2; ++q) CHECK(k.at(i * 2 + p, j * 2 + q) == a.at(i, j) * b.at(p, q));
    CHECK(trace(a) == 5);
    CHECK(trace(k) == trace(a) * trace(b));
    CHECK_THROWS_AS(trace(SparseMatrix(2, 3)), Error);
}

TEST_CASE("rank and kernel on matrices of known rank") {
    std::mt19937 rng(7);
    for (std::size_t trial = 0; trial < 40; ++trial) {
        std::size_t rows = 2 + trial % 5, cols = 3 + trial % 4;
        std::size_t r = trial % (std::min(rows, cols) + 1);
        SparseMatrix m = known_rank(rng, rows, cols, r);
        CHECK(rank(m) == r);
        CHECK(rank(m.transpose()) == r);
        CHECK(dense_rank(m.to_dense()) == r);
        CHECK(kernel_dimension(m) == cols - r);
        CHECK(dense_nullspace(m.to_dense(), cols).size() == cols - r);
    }
}

TEST_CASE("dense inverse and solve") {
    DenseMatrix m{{2, 1, 0}, {1, 3, 1}, {0, 1, 4}};
    auto inv = dense_inverse(m);
    REQUIRE(inv);
    CHECK(SparseMatrix::from_dense(m) * SparseMatrix::from_dense(*inv) == SparseMatrix::identity(3));
    CHECK_FALSE(dense_inverse(DenseMatrix{{1, 2}, {2, 4}}));
    auto x = dense_solve(m, Vec{1, 2, 3});
    REQUIRE(x);
    CHECK(SparseMatrix::from_dense(m).apply(*x) == Vec{1, 2, 3});
    CHECK_FALSE(dense_solve(DenseMatrix{{1, 1}, {1, 1}}, Vec{0, 1}));
}

TEST_CASE("echelon basis coordinates reconstruct members") {
    EchelonBasis basis(4);
    std::vector<SparseVec> vs{{{0, Rational(1)}, {2, Rational(2)}},
                              {{1, Rational(1)}, {2, Rational(-1)}},
                              {{0, Rational(1)}, {1, Rational(1)}, {2, Rational(1)}}};
    CHECK(basis.insert(vs[0]));
    CHECK(basis.insert(vs[1]));
    CHECK_FALSE(basis.insert(vs[2]));
    CHECK(basis.size() == 2);
    SparseVec w{{0, Rational(3)}, {1, Rational(-2)}, {2, Rational(8)}};
    REQUIRE(basis.contains(w));
    Vec c = basis.coordinates(w);
    SparseVec back;
    for (std::size_t i = 0; i < c.size(); ++i) axpy(back, c[i], basis.vectors()[i]);
    CHECK(back == w);
    CHECK_FALSE(basis.contains(SparseVec{{3, Rational(1)}}));
}

TEST_CASE("tensor flattening and permutation") {
    Tensor t({2, 3, 2});
    t.set({1, 2, 0}, Rational(5));
    CHECK(t.flat({1, 2, 0}) == 10);
    CHECK(t.unflat(10) == std::vector<std::size_t>{1, 2, 0});
    Tensor p = t.permuted({2, 0, 1});
    CHECK(p.factor_dims() == std::vector<std::size_t>{2, 2, 3});
    CHECK(p.get({0, 1, 2}) == 5);
    CHECK((t - t).nnz() == 0);
}
