#include "kitaev/hopf.hpp"

#include "kitaev/error.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace kitaev {

Tensor HopfAlgebraData::comult_tensor() const {
    std::size_t n = dim();
    Tensor t({n, n, n});
    for (std::size_t i = 0; i < n; ++i) {
        for (const auto& [f, v] : comult[i]) t.add({i, f / n, f % n}, v);
    }
    return t;
}

SparseVec HopfAlgebraData::coproduct(const SparseVec& x) const {
    SparseAccumulator acc;
    for (const auto& [i, v] : x) acc.add(comult[i], v);
    return acc.finish();
}

SparseVec HopfAlgebraData::iterated_coproduct(const SparseVec& x, std::size_t legs) const {
    if (legs == 0) throw Error(ErrorKind::DimensionMismatch, "coproduct into zero legs");
    std::size_t n = dim();
    SparseVec cur = x;
    // Split the last leg each round.
    for (std::size_t l = 1; l < legs; ++l) {
        SparseAccumulator acc;
        for (const auto& [f, v] : cur) {
            std::size_t head = f / n, last = f % n;
            for (const auto& [g, w] : comult[last]) acc.add((head * n + g / n) * n + g % n, v * w);
        }
        cur = acc.finish();
    }
    return cur;
}

SparseVec HopfAlgebraData::apply_antipode(const SparseVec& x) const {
    SparseAccumulator acc;
    auto cols = antipode.columns();
    for (const auto& [i, v] : x) acc.add(cols[i], v);
    return acc.finish();
}

Rational HopfAlgebraData::apply_counit(const SparseVec& x) const {
    Rational s = 0;
    for (const auto& [i, v] : x) s += v * counit[i];
    return s;
}

SparseVec HopfAlgebraData::signed_power(const SparseVec& x, int sign) const {
    return sign > 0 ? x : apply_antipode(x);
}

bool HopfAlgebraData::operator==(const HopfAlgebraData& other) const {
    return algebra == other.algebra && comult == other.comult && counit == other.counit &&
           antipode == other.antipode;
}

HopfAlgebraData make_hopf(AlgebraData algebra, std::vector<SparseVec> comult, Vec counit,
                          SparseMatrix antipode) {
    std::size_t n = algebra.dim;
    if (comult.size() != n || counit.size() != n || antipode.rows() != n || antipode.cols() != n) {
        throw Error(ErrorKind::DimensionMismatch, "Hopf structure constants have wrong size");
    }
    for (const auto& c : comult) {
        for (const auto& [f, v] : c) {
            if (f >= n * n) throw Error(ErrorKind::DimensionMismatch, "coproduct index out of range");
        }
    }
    return HopfAlgebraData{std::move(algebra), std::move(comult), std::move(counit),
                           std::move(antipode)};
}

GroupTable::GroupTable(std::vector<std::string> labels, std::vector<std::vector<std::size_t>> table)
    : labels_(std::move(labels)), table_(std::move(table)) {
    std::size_t n = labels_.size();
    if (n == 0) throw Error(ErrorKind::NotAGroup, "empty group");
    if (table_.size() != n) throw Error(ErrorKind::NotAGroup, "table is not square");
    for (const auto& row : table_) {
        if (row.size() != n) throw Error(ErrorKind::NotAGroup, "table is not square");
        for (auto x : row) {
            if (x >= n) throw Error(ErrorKind::NotAGroup, "closure: entry out of range");
        }
    }
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            for (std::size_t c = 0; c < n; ++c) {
                if (table_[table_[a][b]][c] != table_[a][table_[b][c]]) {
                    throw Error(ErrorKind::NotAGroup, "associativity fails at (" + labels_[a] + "," +
                                                          labels_[b] + "," + labels_[c] + ")");
                }
            }
        }
    }
    bool found = false;
    for (std::size_t e = 0; e < n && !found; ++e) {
        bool ok = true;
        for (std::size_t a = 0; a < n && ok; ++a) ok = table_[e][a] == a && table_[a][e] == a;
        if (ok) {
            identity_ = e;
            found = true;
        }
    }
    if (!found) throw Error(ErrorKind::NotAGroup, "identity: no two-sided identity element");
    inverse_.assign(n, n);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            if (table_[a][b] == identity_ && table_[b][a] == identity_) inverse_[a] = b;
        }
        if (inverse_[a] == n) throw Error(ErrorKind::NotAGroup, "inverses: " + labels_[a] + " has none");
    }
}

std::size_t GroupTable::index_of(const std::string& label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) throw Error(ErrorKind::InputError, "unknown group element " + label);
    return static_cast<std::size_t>(it - labels_.begin());
}

GroupTable cyclic_group(std::size_t n) {
    if (n == 0) throw Error(ErrorKind::NotAGroup, "cyclic group of order zero");
    std::vector<std::string> labels;
    for (std::size_t k = 0; k < n; ++k) labels.push_back(k == 0 ? "e" : (k == 1 ? "g" : "g^" + std::to_string(k)));
    std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
    }
    return GroupTable(std::move(labels), std::move(t));
}

GroupTable direct_product(const GroupTable& a, const GroupTable& b) {
    std::size_t na = a.order(), nb = b.order();
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < na; ++i) {
        for (std::size_t j = 0; j < nb; ++j) labels.push_back("(" + a.labels()[i] + "," + b.labels()[j] + ")");
    }
    std::vector<std::vector<std::size_t>> t(na * nb, std::vector<std::size_t>(na * nb));
    for (std::size_t i1 = 0; i1 < na; ++i1) {
        for (std::size_t j1 = 0; j1 < nb; ++j1) {
            for (std::size_t i2 = 0; i2 < na; ++i2) {
                for (std::size_t j2 = 0; j2 < nb; ++j2) {
                    t[i1 * nb + j1][i2 * nb + j2] = a.mul(i1, i2) * nb + b.mul(j1, j2);
                }
            }
        }
    }
    return GroupTable(std::move(labels), std::move(t));
}

GroupTable klein_four_group() { return direct_product(cyclic_group(2), cyclic_group(2)); }

GroupTable symmetric_group_3() {
    // Permutations of {0,1,2} in lexicographic order of their images.
    std::vector<std::array<int, 3>> perms;
    std::array<int, 3> p{0, 1, 2};
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    std::vector<std::string> labels;
    for (const auto& q : perms) {
        labels.push_back("[" + std::to_string(q[0]) + std::to_string(q[1]) + std::to_string(q[2]) + "]");
    }
    std::size_t n = perms.size();
    std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            std::array<int, 3> c{};
            for (int x = 0; x < 3; ++x) c[x] = perms[a][perms[b][x]];  // a after b
            t[a][b] = static_cast<std::size_t>(std::find(perms.begin(), perms.end(), c) - perms.begin());
        }
    }
    return GroupTable(std::move(labels), std::move(t));
}

HopfAlgebraData group_algebra(const GroupTable& g) {
    std::size_t n = g.order();
    std::vector<SparseVec> products(n * n);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) products[a * n + b] = {{g.mul(a, b), Rational(1)}};
    }
    AlgebraData alg = make_algebra(n, g.labels(), std::move(products), basis_vec(n, g.identity()));
    std::vector<SparseVec> comult(n);
    std::vector<Triplet> s;
    for (std::size_t a = 0; a < n; ++a) {
        comult[a] = {{a * n + a, Rational(1)}};
        s.push_back({g.inverse(a), a, Rational(1)});
    }
    return make_hopf(std::move(alg), std::move(comult), Vec(n, Rational(1)),
                     SparseMatrix::from_triplets(n, n, s));
}

HopfAlgebraData trivial_hopf() {
    return make_hopf(trivial_algebra(), {SparseVec{{0, Rational(1)}}}, Vec{Rational(1)},
                     SparseMatrix::identity(1));
}

HopfAlgebraData dual_hopf(const HopfAlgebraData& h) {
    std::size_t n = h.dim();
    std::vector<SparseVec> products(n * n);
    for (std::size_t k = 0; k < n; ++k) {
        for (const auto& [f, v] : h.comult[k]) products[f].emplace_back(k, v);
    }
    std::vector<SparseVec> comult(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            for (const auto& [k, v] : h.algebra.product(i, j)) comult[k].emplace_back(i * n + j, v);
        }
    }
    std::vector<std::string> labels;
    for (const auto& l : h.algebra.basis_labels) labels.push_back("d[" + l + "]");
    AlgebraData alg = make_algebra(n, std::move(labels), std::move(products), h.counit);
    return make_hopf(std::move(alg), std::move(comult), h.algebra.unit, h.antipode.transpose());
}

HopfAlgebraData cop(const HopfAlgebraData& h) {
    std::size_t n = h.dim();
    HopfAlgebraData out = h;
    for (std::size_t i = 0; i < n; ++i) {
        SparseAccumulator acc;
        for (const auto& [f, v] : h.comult[i]) acc.add((f % n) * n + f / n, v);
        out.comult[i] = acc.finish();
    }
    // S^{-1} is the antipode of the co-opposite; for involutive S this is S itself.
    auto inv = dense_inverse(h.antipode.to_dense());
    if (inv) out.antipode = SparseMatrix::from_dense(*inv);
    return out;
}

HopfAlgebraData op_cop(const HopfAlgebraData& h) {
    std::size_t n = h.dim();
    HopfAlgebraData out = h;
    out.algebra = opposite_algebra(h.algebra);
    for (std::size_t i = 0; i < n; ++i) {
        SparseAccumulator acc;
        for (const auto& [f, v] : h.comult[i]) acc.add((f % n) * n + f / n, v);
        out.comult[i] = acc.finish();
    }
    return out;
}

HopfAlgebraData signed_hopf(const HopfAlgebraData& h, int sign) { return sign > 0 ? h : op_cop(h); }

HopfAlgebraData tensor_hopf(const HopfAlgebraData& a, const HopfAlgebraData& b) {
    std::size_t na = a.dim(), nb = b.dim(), n = na * nb;
    AlgebraData alg = tensor_algebra(a.algebra, b.algebra);
    std::vector<SparseVec> comult(n);
    for (std::size_t i = 0; i < na; ++i) {
        for (std::size_t j = 0; j < nb; ++j) {
            SparseAccumulator acc;
            for (const auto& [f, x] : a.comult[i]) {
                std::size_t i1 = f / na, i2 = f % na;
                for (const auto& [g, y] : b.comult[j]) {
                    std::size_t j1 = g / nb, j2 = g % nb;
                    acc.add((i1 * nb + j1) * n + (i2 * nb + j2), x * y);
                }
            }
            comult[i * nb + j] = acc.finish();
        }
    }
    Vec counit(n);
    for (std::size_t i = 0; i < na; ++i) {
        for (std::size_t j = 0; j < nb; ++j) counit[i * nb + j] = a.counit[i] * b.counit[j];
    }
    return make_hopf(std::move(alg), std::move(comult), std::move(counit), kron(a.antipode, b.antipode));
}

HaarIntegral haar_integral(const HopfAlgebraData& h) {
    // Unknowns: coefficients of l. Equations: b_i l - eps(b_i) l = 0 and eps(l) = 1.
    std::size_t n = h.dim();
    DenseMatrix a;
    Vec rhs;
    for (std::size_t i = 0; i < n; ++i) {
        DenseMatrix block(n, Vec(n, Rational(0)));
        for (std::size_t c = 0; c < n; ++c) {
            for (const auto& [k, v] : h.algebra.product(i, c)) block[k][c] += v;
            block[c][c] -= h.counit[i];
        }
        for (auto& row : block) {
            a.push_back(std::move(row));
            rhs.push_back(0);
        }
    }
    a.push_back(h.counit);
    rhs.push_back(1);
    auto sol = dense_solve(a, rhs);
    if (!sol) throw Error(ErrorKind::NoHaarIntegral, "no normalized left integral");
    SparseVec l = to_sparse(*sol);
    for (std::size_t i = 0; i < n; ++i) {
        SparseVec bi{{i, Rational(1)}};
        if (h.algebra.multiply(l, bi) != scaled(l, h.counit[i])) {
            throw Error(ErrorKind::NoHaarIntegral, "left integral is not right invariant");
        }
    }
    return HaarIntegral{*sol};
}

namespace {

std::string at(std::size_t i) { return "at b" + std::to_string(i); }

SparseVec basis(std::size_t i) { return SparseVec{{i, Rational(1)}}; }

// (f (x) id) or (id (x) f) on a two-leg element, f given per basis element.
template <class F>
SparseVec map_leg(const SparseVec& x, std::size_t n_first, std::size_t n_second, bool first, F&& f,
                  std::size_t out_dim) {
    SparseAccumulator acc;
    for (const auto& [idx, v] : x) {
        std::size_t a = idx / n_second, b = idx % n_second;
        if (first) {
            for (const auto& [k, w] : f(a)) acc.add(k * n_second + b, v * w);
        } else {
            for (const auto& [k, w] : f(b)) acc.add(a * out_dim + k, v * w);
        }
    }
    (void)n_first;
    return acc.finish();
}

}  // namespace

Report validate_hopf(const HopfAlgebraData& h) {
    Report r = validate_algebra(h.algebra);
    std::size_t n = h.dim();
    auto delta = [&](std::size_t i) { return h.comult[i]; };
    auto eps_leg = [&](std::size_t i) {
        SparseVec v;
        if (!is_zero(h.counit[i])) v.emplace_back(0, h.counit[i]);
        return v;
    };

    auto run = [&](const std::string& name, auto&& check) {
        for (std::size_t i = 0; i < n; ++i) {
            if (!check(i)) {
                r.fail(name, at(i));
                return;
            }
        }
        r.pass(name);
    };

    run("coassociativity", [&](std::size_t i) {
        auto lhs = map_leg(h.comult[i], n, n, true, delta, n * n);  // (Delta (x) id): index (j*n+k)*n + l
        auto rhs = map_leg(h.comult[i], n, n, false, delta, n * n);  // (id (x) Delta): index j*n*n + (k*n+l)
        return lhs == rhs;
    });
    run("counit", [&](std::size_t i) {
        auto l = map_leg(h.comult[i], n, n, true, eps_leg, 1);
        auto rr = map_leg(h.comult[i], n, n, false, eps_leg, 1);
        return l == basis(i) && rr == basis(i);
    });

    bool mult_ok = true;
    for (std::size_t i = 0; i < n && mult_ok; ++i) {
        for (std::size_t j = 0; j < n && mult_ok; ++j) {
            auto lhs = h.coproduct(h.algebra.product(i, j));
            auto rhs = tensor_multiply(h.algebra, h.algebra, h.comult[i], h.comult[j]);
            if (lhs != rhs) {
                r.fail("comultiplication is multiplicative", "at (b" + std::to_string(i) + ",b" + std::to_string(j) + ")");
                mult_ok = false;
            }
        }
    }
    auto u = h.algebra.unit_sparse();
    if (mult_ok) {
        SparseAccumulator uu;
        for (const auto& [i, x] : u) {
            for (const auto& [j, y] : u) uu.add(i * n + j, x * y);
        }
        if (h.coproduct(u) != uu.finish()) {
            r.fail("comultiplication is multiplicative", "Delta(1) != 1 (x) 1");
        } else {
            r.pass("comultiplication is multiplicative");
        }
    }

    bool eps_ok = h.apply_counit(u) == 1;
    std::string eps_detail = eps_ok ? "" : "eps(1) != 1";
    for (std::size_t i = 0; i < n && eps_ok; ++i) {
        for (std::size_t j = 0; j < n && eps_ok; ++j) {
            if (h.apply_counit(h.algebra.product(i, j)) != h.counit[i] * h.counit[j]) {
                eps_ok = false;
                eps_detail = "at (b" + std::to_string(i) + ",b" + std::to_string(j) + ")";
            }
        }
    }
    r.add("counit is multiplicative", eps_ok, eps_detail);

    auto cols = h.antipode.columns();
    auto antipode_side = [&](std::size_t i, bool left) {
        SparseAccumulator acc;
        for (const auto& [f, v] : h.comult[i]) {
            std::size_t a = f / n, b = f % n;
            SparseVec x = left ? cols[a] : basis(a);
            SparseVec y = left ? basis(b) : cols[b];
            acc.add(h.algebra.multiply(x, y), v);
        }
        return acc.finish() == scaled(u, h.counit[i]);
    };
    run("antipode", [&](std::size_t i) { return antipode_side(i, true) && antipode_side(i, false); });
    run("involutive antipode", [&](std::size_t i) { return h.apply_antipode(cols[i]) == basis(i); });
    return r;
}

bool same_hopf(const HopfPtr& a, const HopfPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return *a == *b;
}

}  // namespace kitaev
