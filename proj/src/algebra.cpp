#include "kitaev/algebra.hpp"

#include "kitaev/error.hpp"

#include <sstream>

namespace kitaev {

Tensor AlgebraData::mult_tensor() const {
    Tensor t({dim, dim, dim});
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            for (const auto& [k, v] : product(i, j)) t.add({i, j, k}, v);
        }
    }
    return t;
}

SparseVec AlgebraData::multiply(const SparseVec& a, const SparseVec& b) const {
    SparseAccumulator acc;
    for (const auto& [i, x] : a) {
        for (const auto& [j, y] : b) acc.add(product(i, j), x * y);
    }
    return acc.finish();
}

Vec AlgebraData::multiply(const Vec& a, const Vec& b) const {
    return to_dense(multiply(to_sparse(a), to_sparse(b)), dim);
}

SparseMatrix AlgebraData::left_multiplication(const SparseVec& a) const {
    std::vector<SparseVec> cols(dim);
    for (std::size_t j = 0; j < dim; ++j) cols[j] = multiply(a, SparseVec{{j, Rational(1)}});
    return SparseMatrix::from_columns(dim, cols);
}

SparseMatrix AlgebraData::right_multiplication(const SparseVec& a) const {
    std::vector<SparseVec> cols(dim);
    for (std::size_t j = 0; j < dim; ++j) cols[j] = multiply(SparseVec{{j, Rational(1)}}, a);
    return SparseMatrix::from_columns(dim, cols);
}

bool AlgebraData::operator==(const AlgebraData& other) const {
    return dim == other.dim && products == other.products && unit == other.unit;
}

AlgebraData make_algebra(std::size_t dim, std::vector<std::string> labels,
                         std::vector<SparseVec> products, Vec unit) {
    if (products.size() != dim * dim || unit.size() != dim) {
        throw Error(ErrorKind::DimensionMismatch, "algebra structure constants have wrong size");
    }
    for (const auto& p : products) {
        for (const auto& [k, v] : p) {
            if (k >= dim) throw Error(ErrorKind::DimensionMismatch, "product index out of range");
        }
    }
    if (labels.empty()) {
        for (std::size_t i = 0; i < dim; ++i) labels.push_back("b" + std::to_string(i));
    }
    return AlgebraData{dim, std::move(labels), std::move(products), std::move(unit)};
}

AlgebraData trivial_algebra() {
    return make_algebra(1, {"1"}, {SparseVec{{0, Rational(1)}}}, Vec{Rational(1)});
}

AlgebraData opposite_algebra(const AlgebraData& a) {
    AlgebraData out = a;
    for (std::size_t i = 0; i < a.dim; ++i) {
        for (std::size_t j = 0; j < a.dim; ++j) out.products[i * a.dim + j] = a.product(j, i);
    }
    return out;
}

AlgebraData tensor_algebra(const AlgebraData& a, const AlgebraData& b) {
    std::size_t n = a.dim * b.dim;
    std::vector<std::string> labels;
    labels.reserve(n);
    for (const auto& x : a.basis_labels) {
        for (const auto& y : b.basis_labels) labels.push_back(x + "*" + y);
    }
    std::vector<SparseVec> products(n * n);
    for (std::size_t i1 = 0; i1 < a.dim; ++i1) {
        for (std::size_t j1 = 0; j1 < b.dim; ++j1) {
            for (std::size_t i2 = 0; i2 < a.dim; ++i2) {
                for (std::size_t j2 = 0; j2 < b.dim; ++j2) {
                    SparseAccumulator acc;
                    for (const auto& [k, x] : a.product(i1, i2)) {
                        for (const auto& [l, y] : b.product(j1, j2)) acc.add(k * b.dim + l, x * y);
                    }
                    products[(i1 * b.dim + j1) * n + (i2 * b.dim + j2)] = acc.finish();
                }
            }
        }
    }
    Vec unit(n, Rational(0));
    for (std::size_t i = 0; i < a.dim; ++i) {
        for (std::size_t j = 0; j < b.dim; ++j) unit[i * b.dim + j] = a.unit[i] * b.unit[j];
    }
    return AlgebraData{n, std::move(labels), std::move(products), std::move(unit)};
}

SparseVec tensor_multiply(const AlgebraData& a, const AlgebraData& b, const SparseVec& x,
                          const SparseVec& y) {
    SparseAccumulator acc;
    for (const auto& [p, u] : x) {
        std::size_t i1 = p / b.dim, j1 = p % b.dim;
        for (const auto& [q, w] : y) {
            std::size_t i2 = q / b.dim, j2 = q % b.dim;
            Rational c = u * w;
            for (const auto& [k, s] : a.product(i1, i2)) {
                for (const auto& [l, t] : b.product(j1, j2)) acc.add(k * b.dim + l, c * s * t);
            }
        }
    }
    return acc.finish();
}

namespace {

std::string triple(std::size_t i, std::size_t j, std::size_t k) {
    std::ostringstream os;
    os << "(" << i << "," << j << "," << k << ")";
    return os.str();
}

}  // namespace

Report validate_algebra(const AlgebraData& a) {
    Report r;
    std::size_t n = a.dim;
    bool assoc = true;
    for (std::size_t i = 0; i < n && assoc; ++i) {
        for (std::size_t j = 0; j < n && assoc; ++j) {
            for (std::size_t k = 0; k < n && assoc; ++k) {
                SparseVec bk{{k, Rational(1)}};
                SparseVec bi{{i, Rational(1)}};
                auto lhs = a.multiply(a.product(i, j), bk);
                auto rhs = a.multiply(bi, a.product(j, k));
                if (lhs != rhs) {
                    r.fail("associativity", "fails at basis triple " + triple(i, j, k));
                    assoc = false;
                }
            }
        }
    }
    if (assoc) r.pass("associativity");
    auto u = a.unit_sparse();
    bool unit_ok = true;
    for (std::size_t i = 0; i < n && unit_ok; ++i) {
        SparseVec bi{{i, Rational(1)}};
        if (a.multiply(u, bi) != bi || a.multiply(bi, u) != bi) {
            r.fail("unit", "fails at basis element " + std::to_string(i));
            unit_ok = false;
        }
    }
    if (unit_ok) r.pass("unit");
    return r;
}

std::vector<Vec> center_basis(const AlgebraData& a) {
    // z in Z(A) iff b_i z - z b_i = 0 for all i; unknowns are the coefficients of z.
    std::size_t n = a.dim;
    DenseMatrix sys;
    for (std::size_t i = 0; i < n; ++i) {
        DenseMatrix block(n, Vec(n, Rational(0)));
        for (std::size_t c = 0; c < n; ++c) {
            for (const auto& [k, v] : a.product(i, c)) block[k][c] += v;
            for (const auto& [k, v] : a.product(c, i)) block[k][c] -= v;
        }
        for (auto& row : block) sys.push_back(std::move(row));
    }
    return dense_nullspace(sys, n);
}

std::size_t center_dimension(const AlgebraData& a) { return center_basis(a).size(); }

}  // namespace kitaev
