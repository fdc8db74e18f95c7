#pragma once

#include "kitaev/linalg.hpp"
#include "kitaev/report.hpp"

#include <string>
#include <vector>

namespace kitaev {

// Finite-dimensional unital algebra by structure constants.
// products[i * dim + j] holds b_i * b_j in the basis.
struct AlgebraData {
    std::size_t dim = 0;
    std::vector<std::string> basis_labels;
    std::vector<SparseVec> products;
    Vec unit;

    const SparseVec& product(std::size_t i, std::size_t j) const { return products[i * dim + j]; }
    Tensor mult_tensor() const;  // slots (i, j, k)

    SparseVec multiply(const SparseVec& a, const SparseVec& b) const;
    Vec multiply(const Vec& a, const Vec& b) const;
    // Matrices of x -> a x and x -> x a.
    SparseMatrix left_multiplication(const SparseVec& a) const;
    SparseMatrix right_multiplication(const SparseVec& a) const;
    SparseVec unit_sparse() const { return to_sparse(unit); }

    bool operator==(const AlgebraData& other) const;
};

AlgebraData make_algebra(std::size_t dim, std::vector<std::string> labels,
                         std::vector<SparseVec> products, Vec unit);
AlgebraData trivial_algebra();
AlgebraData opposite_algebra(const AlgebraData& a);
// Basis b_i (x) c_j sits at i * dim_b + j.
AlgebraData tensor_algebra(const AlgebraData& a, const AlgebraData& b);

// Multiplication on A (x) B for elements flattened as i * dim_b + j.
SparseVec tensor_multiply(const AlgebraData& a, const AlgebraData& b, const SparseVec& x,
                          const SparseVec& y);

Report validate_algebra(const AlgebraData& a);
std::size_t center_dimension(const AlgebraData& a);
// Basis of the center as coefficient vectors.
std::vector<Vec> center_basis(const AlgebraData& a);

}  // namespace kitaev
