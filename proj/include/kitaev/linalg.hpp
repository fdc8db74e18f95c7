#pragma once

#include "kitaev/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace kitaev {

// Sorted by index, no stored zeros.
using SparseVec = std::vector<std::pair<std::size_t, Rational>>;

SparseVec to_sparse(const Vec& v);
Vec to_dense(const SparseVec& v, std::size_t n);
void axpy(SparseVec& y, const Rational& a, const SparseVec& x);  // y += a*x
SparseVec scaled(const SparseVec& x, const Rational& a);

// Accumulates into a map; finish() drops zeros.
class SparseAccumulator {
public:
    void add(std::size_t index, const Rational& value);
    void add(const SparseVec& v, const Rational& scale);
    SparseVec finish() const;
    bool empty() const { return entries_.empty(); }

private:
    std::map<std::size_t, Rational> entries_;
};

struct Triplet {
    std::size_t row;
    std::size_t col;
    Rational value;
};

class SparseMatrix {
public:
    SparseMatrix() = default;
    SparseMatrix(std::size_t rows, std::size_t cols);

    static SparseMatrix identity(std::size_t n);
    static SparseMatrix from_triplets(std::size_t rows, std::size_t cols,
                                      const std::vector<Triplet>& entries);
    static SparseMatrix from_dense(const std::vector<Vec>& rows);
    static SparseMatrix from_columns(std::size_t rows, const std::vector<SparseVec>& columns);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t nnz() const;
    bool is_square() const { return rows_ == cols_; }

    Rational at(std::size_t i, std::size_t j) const;
    const SparseVec& row(std::size_t i) const { return data_[i]; }
    std::vector<SparseVec> columns() const;
    std::vector<Vec> to_dense() const;

    SparseMatrix transpose() const;
    SparseMatrix operator*(const SparseMatrix& other) const;
    SparseMatrix operator+(const SparseMatrix& other) const;
    SparseMatrix operator-(const SparseMatrix& other) const;
    SparseMatrix scaled(const Rational& a) const;
    Vec apply(const Vec& x) const;
    SparseVec apply(const SparseVec& x) const;

    bool is_zero() const;
    bool operator==(const SparseMatrix& other) const;
    bool operator!=(const SparseMatrix& other) const { return !(*this == other); }

    // First differing entry, if any.
    std::optional<std::pair<std::size_t, std::size_t>> first_difference(const SparseMatrix& other) const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<SparseVec> data_;
};

SparseMatrix kron(const SparseMatrix& a, const SparseMatrix& b);
Rational trace(const SparseMatrix& m);
std::size_t rank(const SparseMatrix& m);
std::size_t kernel_dimension(const SparseMatrix& m);

// Dense helpers for the small systems (Gram matrices, Haar solves, centers).
using DenseMatrix = std::vector<Vec>;

DenseMatrix dense_identity(std::size_t n);
// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(DenseMatrix& m);
std::size_t dense_rank(DenseMatrix m);
std::optional<DenseMatrix> dense_inverse(const DenseMatrix& m);
// Some solution of a·x = b, if consistent.
std::optional<Vec> dense_solve(const DenseMatrix& a, const Vec& b);
// Basis of {x : a·x = 0}.
std::vector<Vec> dense_nullspace(const DenseMatrix& a, std::size_t cols);

// Incrementally grown subspace kept in fully reduced echelon form, so the
// coordinates of a member are its entries at the pivot positions.
class EchelonBasis {
public:
    explicit EchelonBasis(std::size_t ambient);
    // Returns true if v was independent of the current span.
    bool insert(const SparseVec& v);
    SparseVec reduce(const SparseVec& v) const;
    bool contains(const SparseVec& v) const { return reduce(v).empty(); }
    std::size_t size() const { return rows_.size(); }
    std::size_t ambient() const { return ambient_; }
    const std::vector<SparseVec>& vectors() const { return rows_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }
    // Coordinates of a vector known to lie in the span.
    Vec coordinates(const SparseVec& v) const;

private:
    std::size_t ambient_;
    std::vector<SparseVec> rows_;
    std::vector<std::size_t> pivots_;
    std::map<std::size_t, std::size_t> pivot_row_;
};

// Mixed-radix indexing with the first factor most significant.
class MixedRadix {
public:
    MixedRadix() = default;
    explicit MixedRadix(std::vector<std::size_t> dims);
    const std::vector<std::size_t>& dims() const { return dims_; }
    std::size_t factors() const { return dims_.size(); }
    std::uint64_t size() const { return size_; }
    std::uint64_t stride(std::size_t factor) const { return strides_[factor]; }
    std::uint64_t flat(const std::vector<std::size_t>& index) const;
    std::vector<std::size_t> unflat(std::uint64_t flat) const;
    std::size_t digit(std::uint64_t flat, std::size_t factor) const {
        return static_cast<std::size_t>((flat / strides_[factor]) % dims_[factor]);
    }

private:
    std::vector<std::size_t> dims_;
    std::vector<std::uint64_t> strides_;
    std::uint64_t size_ = 1;
};

class Tensor {
public:
    Tensor() = default;
    explicit Tensor(std::vector<std::size_t> factor_dims);

    const std::vector<std::size_t>& factor_dims() const { return dims_; }
    std::uint64_t size() const;
    std::uint64_t flat(const std::vector<std::size_t>& index) const;
    std::vector<std::size_t> unflat(std::uint64_t flat) const;

    Rational get(const std::vector<std::size_t>& index) const;
    void set(const std::vector<std::size_t>& index, const Rational& value);
    void add(const std::vector<std::size_t>& index, const Rational& value);
    void add_flat(std::uint64_t flat, const Rational& value);

    const std::map<std::uint64_t, Rational>& entries() const { return entries_; }
    std::size_t nnz() const { return entries_.size(); }
    bool operator==(const Tensor& other) const;
    bool operator!=(const Tensor& other) const { return !(*this == other); }
    Tensor operator-(const Tensor& other) const;
    Tensor permuted(const std::vector<std::size_t>& perm) const;  // new slot i = old slot perm[i]

private:
    std::vector<std::size_t> dims_;
    std::map<std::uint64_t, Rational> entries_;
};

}  // namespace kitaev
