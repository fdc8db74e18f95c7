#include "kitaev/linalg.hpp"

#include "kitaev/error.hpp"

#include <algorithm>
#include <set>

namespace kitaev {

SparseVec to_sparse(const Vec& v) {
    SparseVec out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!kitaev::is_zero(v[i])) out.emplace_back(i, v[i]);
    }
    return out;
}

Vec to_dense(const SparseVec& v, std::size_t n) {
    Vec out(n, Rational(0));
    for (const auto& [i, x] : v) out[i] = x;
    return out;
}

void axpy(SparseVec& y, const Rational& a, const SparseVec& x) {
    if (is_zero(a) || x.empty()) return;
    SparseVec out;
    out.reserve(y.size() + x.size());
    std::size_t i = 0, j = 0;
    while (i < y.size() || j < x.size()) {
        if (j == x.size() || (i < y.size() && y[i].first < x[j].first)) {
            out.push_back(std::move(y[i++]));
        } else if (i == y.size() || x[j].first < y[i].first) {
            out.emplace_back(x[j].first, a * x[j].second);
            ++j;
        } else {
            Rational s = y[i].second + a * x[j].second;
            if (!kitaev::is_zero(s)) out.emplace_back(y[i].first, std::move(s));
            ++i;
            ++j;
        }
    }
    y = std::move(out);
}

SparseVec scaled(const SparseVec& x, const Rational& a) {
    SparseVec out;
    if (is_zero(a)) return out;
    out.reserve(x.size());
    for (const auto& [i, v] : x) out.emplace_back(i, v * a);
    return out;
}

void SparseAccumulator::add(std::size_t index, const Rational& value) {
    if (is_zero(value)) return;
    auto [it, inserted] = entries_.try_emplace(index, value);
    if (!inserted) it->second += value;
}

void SparseAccumulator::add(const SparseVec& v, const Rational& scale) {
    if (is_zero(scale)) return;
    for (const auto& [i, x] : v) add(i, x * scale);
}

SparseVec SparseAccumulator::finish() const {
    SparseVec out;
    out.reserve(entries_.size());
    for (const auto& [i, x] : entries_) {
        if (!kitaev::is_zero(x)) out.emplace_back(i, x);
    }
    return out;
}

SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows) {}

SparseMatrix SparseMatrix::identity(std::size_t n) {
    SparseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.data_[i].emplace_back(i, Rational(1));
    return m;
}

SparseMatrix SparseMatrix::from_triplets(std::size_t rows, std::size_t cols,
                                         const std::vector<Triplet>& entries) {
    std::vector<std::map<std::size_t, Rational>> acc(rows);
    for (const auto& t : entries) {
        if (t.row >= rows || t.col >= cols) {
            throw Error(ErrorKind::DimensionMismatch, "triplet out of range");
        }
        auto [it, inserted] = acc[t.row].try_emplace(t.col, t.value);
        if (!inserted) it->second += t.value;
    }
    SparseMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        for (auto& [j, v] : acc[i]) {
            if (!kitaev::is_zero(v)) m.data_[i].emplace_back(j, v);
        }
    }
    return m;
}

SparseMatrix SparseMatrix::from_dense(const std::vector<Vec>& rows) {
    std::size_t r = rows.size();
    std::size_t c = r ? rows[0].size() : 0;
    SparseMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw Error(ErrorKind::DimensionMismatch, "ragged dense matrix");
        m.data_[i] = to_sparse(rows[i]);
    }
    return m;
}

SparseMatrix SparseMatrix::from_columns(std::size_t rows, const std::vector<SparseVec>& columns) {
    SparseMatrix m(rows, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
        for (const auto& [i, v] : columns[j]) {
            if (i >= rows) throw Error(ErrorKind::DimensionMismatch, "column entry out of range");
            if (!kitaev::is_zero(v)) m.data_[i].emplace_back(j, v);
        }
    }
    return m;
}

std::size_t SparseMatrix::nnz() const {
    std::size_t n = 0;
    for (const auto& r : data_) n += r.size();
    return n;
}

Rational SparseMatrix::at(std::size_t i, std::size_t j) const {
    const auto& r = data_.at(i);
    auto it = std::lower_bound(r.begin(), r.end(), j,
                               [](const auto& e, std::size_t k) { return e.first < k; });
    if (it != r.end() && it->first == j) return it->second;
    return Rational(0);
}

std::vector<SparseVec> SparseMatrix::columns() const {
    std::vector<SparseVec> cols(cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (const auto& [j, v] : data_[i]) cols[j].emplace_back(i, v);
    }
    return cols;
}

std::vector<Vec> SparseMatrix::to_dense() const {
    std::vector<Vec> out(rows_, Vec(cols_, Rational(0)));
    for (std::size_t i = 0; i < rows_; ++i) {
        for (const auto& [j, v] : data_[i]) out[i][j] = v;
    }
    return out;
}

SparseMatrix SparseMatrix::transpose() const {
    SparseMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (const auto& [j, v] : data_[i]) t.data_[j].emplace_back(i, v);
    }
    return t;
}

SparseMatrix SparseMatrix::operator*(const SparseMatrix& other) const {
    if (cols_ != other.rows_) throw Error(ErrorKind::DimensionMismatch, "matrix product");
    SparseMatrix out(rows_, other.cols_);
    std::map<std::size_t, Rational> acc;
    for (std::size_t i = 0; i < rows_; ++i) {
        acc.clear();
        for (const auto& [k, a] : data_[i]) {
            for (const auto& [j, b] : other.data_[k]) {
                auto [it, inserted] = acc.try_emplace(j, a * b);
                if (!inserted) it->second += a * b;
            }
        }
        for (auto& [j, v] : acc) {
            if (!kitaev::is_zero(v)) out.data_[i].emplace_back(j, v);
        }
    }
    return out;
}

SparseMatrix SparseMatrix::operator+(const SparseMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) {
        throw Error(ErrorKind::DimensionMismatch, "matrix sum");
    }
    SparseMatrix out = *this;
    for (std::size_t i = 0; i < rows_; ++i) axpy(out.data_[i], Rational(1), other.data_[i]);
    return out;
}

SparseMatrix SparseMatrix::operator-(const SparseMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) {
        throw Error(ErrorKind::DimensionMismatch, "matrix difference");
    }
    SparseMatrix out = *this;
    for (std::size_t i = 0; i < rows_; ++i) axpy(out.data_[i], Rational(-1), other.data_[i]);
    return out;
}

SparseMatrix SparseMatrix::scaled(const Rational& a) const {
    SparseMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i) out.data_[i] = kitaev::scaled(data_[i], a);
    return out;
}

Vec SparseMatrix::apply(const Vec& x) const {
    if (x.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "matrix-vector product");
    Vec y(rows_, Rational(0));
    for (std::size_t i = 0; i < rows_; ++i) {
        for (const auto& [j, v] : data_[i]) y[i] += v * x[j];
    }
    return y;
}

SparseVec SparseMatrix::apply(const SparseVec& x) const {
    // Column view is not stored; go through the transpose lazily.
    SparseAccumulator acc;
    std::vector<Rational> dense(cols_, Rational(0));
    for (const auto& [j, v] : x) dense[j] = v;
    for (std::size_t i = 0; i < rows_; ++i) {
        Rational s = 0;
        for (const auto& [j, v] : data_[i]) {
            if (!kitaev::is_zero(dense[j])) s += v * dense[j];
        }
        acc.add(i, s);
    }
    return acc.finish();
}

bool SparseMatrix::is_zero() const {
    for (const auto& r : data_) {
        if (!r.empty()) return false;
    }
    return true;
}

bool SparseMatrix::operator==(const SparseMatrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
}

std::optional<std::pair<std::size_t, std::size_t>> SparseMatrix::first_difference(
    const SparseMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) return std::make_pair(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        if (data_[i] == other.data_[i]) continue;
        SparseVec d = data_[i];
        axpy(d, Rational(-1), other.data_[i]);
        if (!d.empty()) return std::make_pair(i, d.front().first);
    }
    return std::nullopt;
}

SparseMatrix kron(const SparseMatrix& a, const SparseMatrix& b) {
    SparseMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    std::vector<Triplet> entries;
    entries.reserve(a.nnz() * b.nnz());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (const auto& [j, x] : a.row(i)) {
            for (std::size_t k = 0; k < b.rows(); ++k) {
                for (const auto& [l, y] : b.row(k)) {
                    entries.push_back({i * b.rows() + k, j * b.cols() + l, x * y});
                }
            }
        }
    }
    return SparseMatrix::from_triplets(out.rows(), out.cols(), entries);
}

Rational trace(const SparseMatrix& m) {
    if (!m.is_square()) throw Error(ErrorKind::NonSquare, "trace of a non-square matrix");
    Rational t = 0;
    for (std::size_t i = 0; i < m.rows(); ++i) t += m.at(i, i);
    return t;
}

std::size_t rank(const SparseMatrix& m) {
    // Gaussian elimination over Q with Markowitz pivoting: the sparsest remaining row,
    // and within it the column shared by the fewest rows, to keep fill-in low.
    std::vector<SparseVec> rows;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (!m.row(i).empty()) rows.push_back(m.row(i));
    }
    std::vector<std::set<std::size_t>> col_rows(m.cols());
    std::set<std::pair<std::size_t, std::size_t>> by_size;  // (nnz, row)
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (const auto& [c, v] : rows[i]) col_rows[c].insert(i);
        by_size.insert({rows[i].size(), i});
    }
    std::size_t r = 0;
    while (!by_size.empty()) {
        std::size_t p = by_size.begin()->second;
        by_size.erase(by_size.begin());
        const SparseVec pivot_row = std::move(rows[p]);
        for (const auto& [c, v] : pivot_row) col_rows[c].erase(p);
        std::size_t col = pivot_row.front().first;
        Rational pv = pivot_row.front().second;
        for (const auto& [c, v] : pivot_row) {
            if (col_rows[c].size() < col_rows[col].size()) {
                col = c;
                pv = v;
            }
        }
        ++r;
        std::vector<std::size_t> targets(col_rows[col].begin(), col_rows[col].end());
        for (std::size_t i : targets) {
            SparseVec& row = rows[i];
            auto it = std::lower_bound(row.begin(), row.end(), std::make_pair(col, Rational(0)),
                                       [](const auto& a, const auto& b) { return a.first < b.first; });
            Rational f = -it->second / pv;
            by_size.erase({row.size(), i});
            for (const auto& [c, v] : row) col_rows[c].erase(i);
            axpy(row, f, pivot_row);
            for (const auto& [c, v] : row) col_rows[c].insert(i);
            if (!row.empty()) by_size.insert({row.size(), i});
        }
    }
    return r;
}

std::size_t kernel_dimension(const SparseMatrix& m) { return m.cols() - rank(m); }

DenseMatrix dense_identity(std::size_t n) {
    DenseMatrix m(n, Vec(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

std::vector<std::size_t> rref(DenseMatrix& m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && is_zero(m[p][c])) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        Rational inv = 1 / m[r][c];
        for (std::size_t k = c; k < cols; ++k) m[r][k] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || is_zero(m[i][c])) continue;
            Rational f = m[i][c];
            for (std::size_t k = c; k < cols; ++k) {
                if (!kitaev::is_zero(m[r][k])) m[i][k] -= f * m[r][k];
            }
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::size_t dense_rank(DenseMatrix m) { return rref(m).size(); }

std::optional<DenseMatrix> dense_inverse(const DenseMatrix& m) {
    std::size_t n = m.size();
    DenseMatrix aug(n, Vec(2 * n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) {
        if (m[i].size() != n) throw Error(ErrorKind::NonSquare, "inverse of a non-square matrix");
        for (std::size_t j = 0; j < n; ++j) aug[i][j] = m[i][j];
        aug[i][n + i] = 1;
    }
    auto piv = rref(aug);
    if (piv.size() < n || piv[n - 1] != n - 1) return std::nullopt;
    DenseMatrix inv(n, Vec(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
    }
    return inv;
}

std::optional<Vec> dense_solve(const DenseMatrix& a, const Vec& b) {
    std::size_t rows = a.size();
    std::size_t cols = rows ? a[0].size() : 0;
    DenseMatrix aug(rows, Vec(cols + 1));
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) aug[i][j] = a[i][j];
        aug[i][cols] = b[i];
    }
    auto piv = rref(aug);
    if (!piv.empty() && piv.back() == cols) return std::nullopt;
    Vec x(cols, Rational(0));
    for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = aug[r][cols];
    return x;
}

std::vector<Vec> dense_nullspace(const DenseMatrix& a, std::size_t cols) {
    DenseMatrix m = a;
    auto piv = rref(m);
    std::vector<bool> is_pivot(cols, false);
    for (auto c : piv) is_pivot[c] = true;
    std::vector<Vec> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        Vec v(cols, Rational(0));
        v[f] = 1;
        for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -m[r][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

EchelonBasis::EchelonBasis(std::size_t ambient) : ambient_(ambient) {}

SparseVec EchelonBasis::reduce(const SparseVec& v) const {
    SparseVec r = v;
    // Pivot entries of a reduced basis vanish in all other basis rows, so one
    // pass over the pivots present in r suffices.
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        auto it = std::lower_bound(r.begin(), r.end(), pivots_[k],
                                   [](const auto& e, std::size_t p) { return e.first < p; });
        if (it == r.end() || it->first != pivots_[k]) continue;
        Rational c = -it->second;
        axpy(r, c, rows_[k]);
    }
    return r;
}

bool EchelonBasis::insert(const SparseVec& v) {
    SparseVec r = reduce(v);
    if (r.empty()) return false;
    std::size_t p = r.front().first;
    Rational inv = 1 / r.front().second;
    r = scaled(r, inv);
    for (auto& row : rows_) {
        auto it = std::lower_bound(row.begin(), row.end(), p,
                                   [](const auto& e, std::size_t q) { return e.first < q; });
        if (it == row.end() || it->first != p) continue;
        Rational c = -it->second;
        axpy(row, c, r);
    }
    pivot_row_[p] = rows_.size();
    rows_.push_back(std::move(r));
    pivots_.push_back(p);
    return true;
}

Vec EchelonBasis::coordinates(const SparseVec& v) const {
    Vec c(rows_.size(), Rational(0));
    for (const auto& [i, x] : v) {
        auto it = pivot_row_.find(i);
        if (it != pivot_row_.end()) c[it->second] = x;
    }
    return c;
}

Tensor::Tensor(std::vector<std::size_t> factor_dims) : dims_(std::move(factor_dims)) {}

std::uint64_t Tensor::size() const {
    std::uint64_t n = 1;
    for (auto d : dims_) n *= d;
    return n;
}

std::uint64_t Tensor::flat(const std::vector<std::size_t>& index) const {
    if (index.size() != dims_.size()) throw Error(ErrorKind::DimensionMismatch, "tensor index rank");
    std::uint64_t f = 0;
    for (std::size_t i = 0; i < dims_.size(); ++i) {
        if (index[i] >= dims_[i]) throw Error(ErrorKind::DimensionMismatch, "tensor index out of range");
        f = f * dims_[i] + index[i];
    }
    return f;
}

std::vector<std::size_t> Tensor::unflat(std::uint64_t flat) const {
    std::vector<std::size_t> idx(dims_.size());
    for (std::size_t i = dims_.size(); i-- > 0;) {
        idx[i] = static_cast<std::size_t>(flat % dims_[i]);
        flat /= dims_[i];
    }
    return idx;
}

Rational Tensor::get(const std::vector<std::size_t>& index) const {
    auto it = entries_.find(flat(index));
    return it == entries_.end() ? Rational(0) : it->second;
}

void Tensor::set(const std::vector<std::size_t>& index, const Rational& value) {
    auto f = flat(index);
    if (is_zero(value)) {
        entries_.erase(f);
    } else {
        entries_[f] = value;
    }
}

void Tensor::add(const std::vector<std::size_t>& index, const Rational& value) {
    add_flat(flat(index), value);
}

void Tensor::add_flat(std::uint64_t f, const Rational& value) {
    if (is_zero(value)) return;
    auto [it, inserted] = entries_.try_emplace(f, value);
    if (!inserted) {
        it->second += value;
        if (is_zero(it->second)) entries_.erase(it);
    }
}

bool Tensor::operator==(const Tensor& other) const {
    return dims_ == other.dims_ && entries_ == other.entries_;
}

Tensor Tensor::operator-(const Tensor& other) const {
    if (dims_ != other.dims_) throw Error(ErrorKind::DimensionMismatch, "tensor difference");
    Tensor out = *this;
    for (const auto& [f, v] : other.entries_) out.add_flat(f, -v);
    return out;
}

Tensor Tensor::permuted(const std::vector<std::size_t>& perm) const {
    std::vector<std::size_t> nd(dims_.size());
    for (std::size_t i = 0; i < perm.size(); ++i) nd[i] = dims_[perm[i]];
    Tensor out(nd);
    for (const auto& [f, v] : entries_) {
        auto idx = unflat(f);
        std::vector<std::size_t> ni(idx.size());
        for (std::size_t i = 0; i < perm.size(); ++i) ni[i] = idx[perm[i]];
        out.add(ni, v);
    }
    return out;
}

MixedRadix::MixedRadix(std::vector<std::size_t> dims) : dims_(std::move(dims)), strides_(dims_.size(), 1) {
    for (std::size_t i = dims_.size(); i-- > 0;) {
        strides_[i] = size_;
        size_ *= dims_[i];
    }
}

std::uint64_t MixedRadix::flat(const std::vector<std::size_t>& index) const {
    if (index.size() != dims_.size()) throw Error(ErrorKind::DimensionMismatch, "multi-index has the wrong length");
    std::uint64_t f = 0;
    for (std::size_t i = 0; i < index.size(); ++i) {
        if (index[i] >= dims_[i]) throw Error(ErrorKind::DimensionMismatch, "multi-index out of range");
        f += index[i] * strides_[i];
    }
    return f;
}

std::vector<std::size_t> MixedRadix::unflat(std::uint64_t flat) const {
    std::vector<std::size_t> out(dims_.size());
    for (std::size_t i = 0; i < dims_.size(); ++i) out[i] = digit(flat, i);
    return out;
}

}  // namespace kitaev
