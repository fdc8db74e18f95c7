#include "kitaev/separability.hpp"

#include "kitaev/error.hpp"

namespace kitaev {

Tensor SeparabilityIdempotent::as_tensor() const {
    Tensor t({dim, dim});
    for (const auto& [f, v] : element) t.add({f / dim, f % dim}, v);
    return t;
}

DenseMatrix trace_form(const AlgebraData& a) {
    std::size_t n = a.dim;
    // t(b_k) = tr(L_{b_k}) = sum_m coefficient of b_m in b_k b_m
    Vec t(n, Rational(0));
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t m = 0; m < n; ++m) {
            for (const auto& [c, v] : a.product(k, m)) {
                if (c == m) t[k] += v;
            }
        }
    }
    DenseMatrix g(n, Vec(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            for (const auto& [k, v] : a.product(i, j)) g[i][j] += v * t[k];
        }
    }
    return g;
}

SeparabilityIdempotent symmetric_separability_idempotent(const AlgebraData& a) {
    std::size_t n = a.dim;
    auto inv = dense_inverse(trace_form(a));
    if (!inv) throw Error(ErrorKind::DegenerateTraceForm, "trace form is degenerate");
    // p = sum_i b_i (x) b^i with b^i = sum_j (T^{-1})_{ji} b_j.
    SeparabilityIdempotent p{n, {}};
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (!is_zero((*inv)[j][i])) p.element.emplace_back(i * n + j, (*inv)[j][i]);
        }
    }
    Report r = check_separability_identities(a, p);
    if (!r.ok()) {
        throw Error(ErrorKind::PropertyCheckFailed, r.first_failure()->name + " " + r.first_failure()->detail);
    }
    return p;
}

namespace {

// (x (x) y) applied as left factor on leg 1 or right factor on leg 2 of a two-leg element.
SparseVec act_legs(const AlgebraData& a, const SparseVec& p, const SparseVec& left1,
                   const SparseVec& right2) {
    std::size_t n = a.dim;
    SparseAccumulator acc;
    for (const auto& [f, v] : p) {
        SparseVec x = a.multiply(left1, SparseVec{{f / n, Rational(1)}});
        SparseVec y = a.multiply(SparseVec{{f % n, Rational(1)}}, right2);
        for (const auto& [i, s] : x) {
            for (const auto& [j, t] : y) acc.add(i * n + j, v * s * t);
        }
    }
    return acc.finish();
}

}  // namespace

Report check_separability_identities(const AlgebraData& a, const SeparabilityIdempotent& p) {
    Report r;
    std::size_t n = a.dim;
    auto one = a.unit_sparse();
    bool inv_ok = true;
    for (std::size_t x = 0; x < n && inv_ok; ++x) {
        SparseVec bx{{x, Rational(1)}};
        if (act_legs(a, p.element, bx, one) != act_legs(a, p.element, one, bx)) {
            r.fail("invariance", "fails at b" + std::to_string(x));
            inv_ok = false;
        }
    }
    if (inv_ok) r.pass("invariance");
    SparseAccumulator prod;
    for (const auto& [f, v] : p.element) prod.add(a.product(f / n, f % n), v);
    bool norm = prod.finish() == one;
    r.add("normalization", norm, norm ? "" : "p1 p2 != 1");
    bool sym = true;
    for (const auto& [f, v] : p.element) {
        std::size_t swapped = (f % n) * n + f / n;
        Rational w = 0;
        for (const auto& [g, u] : p.element) {
            if (g == swapped) w = u;
        }
        if (w != v) {
            sym = false;
            break;
        }
    }
    r.add("symmetry", sym, sym ? "" : "p1 (x) p2 != p2 (x) p1");
    return r;
}

SparseVec enveloping_square(const AlgebraData& a, const SeparabilityIdempotent& p) {
    std::size_t n = a.dim;
    SparseAccumulator acc;
    for (const auto& [f, v] : p.element) {
        for (const auto& [g, w] : p.element) {
            // (p1 (x) p2)(q1 (x) q2) in A (x) A^op = p1 q1 (x) q2 p2
            for (const auto& [i, s] : a.product(f / n, g / n)) {
                for (const auto& [j, t] : a.product(g % n, f % n)) acc.add(i * n + j, v * w * s * t);
            }
        }
    }
    return acc.finish();
}

SparseMatrix bimodule_projection(const AlgebraData& a, const SeparabilityIdempotent& p) {
    std::size_t n = a.dim;
    std::vector<SparseVec> cols(n);
    for (std::size_t x = 0; x < n; ++x) {
        SparseAccumulator acc;
        for (const auto& [f, v] : p.element) {
            acc.add(a.multiply(a.product(f / n, x), SparseVec{{f % n, Rational(1)}}), v);
        }
        cols[x] = acc.finish();
    }
    return SparseMatrix::from_columns(n, cols);
}

SeparabilityIdempotent haar_separability_idempotent(const HopfAlgebraData& h) {
    std::size_t n = h.dim();
    auto l = to_sparse(haar_integral(h).element);
    auto cols = h.antipode.columns();
    SparseAccumulator acc;
    for (const auto& [f, v] : h.coproduct(l)) {
        for (const auto& [j, w] : cols[f % n]) acc.add((f / n) * n + j, v * w);
    }
    return SeparabilityIdempotent{n, acc.finish()};
}

Report check_haar_reduction(const HopfAlgebraData& h) {
    Report r;
    auto trace = symmetric_separability_idempotent(h.algebra);
    auto haar = haar_separability_idempotent(h);
    if (trace == haar) {
        r.pass("haar reduction");
    } else {
        auto diff = trace.as_tensor() - haar.as_tensor();
        auto idx = trace.as_tensor().unflat(diff.entries().begin()->first);
        r.fail("haar reduction", "differs at (" + std::to_string(idx[0]) + "," + std::to_string(idx[1]) + ")");
    }
    return r;
}

Report check_coinvariance(const BicomoduleAlgebraData& k, Side side) {
    Report r;
    auto p = symmetric_separability_idempotent(k.algebra);
    const auto& h = side == Side::Right ? *k.right_hopf : *k.left_hopf;
    std::size_t n = k.dim(), m = h.dim();
    // One-sided coaction as (k0, h) pairs.
    std::vector<std::vector<std::tuple<std::size_t, std::size_t, Rational>>> co(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (side == Side::Right) {
            for (const auto& [f, v] : k.right_coaction(i)) co[i].emplace_back(f / m, f % m, v);
        } else {
            for (const auto& [f, v] : k.left_coaction(i)) co[i].emplace_back(f % n, f / n, v);
        }
    }
    // Coinvariance in K (x) K^op (x) H.
    SparseAccumulator lhs;
    for (const auto& [f, v] : p.element) {
        for (const auto& [a, ha, x] : co[f / n]) {
            for (const auto& [b, hb, y] : co[f % n]) {
                for (const auto& [c, z] : h.algebra.product(ha, hb)) lhs.add((a * n + b) * m + c, v * x * y * z);
            }
        }
    }
    SparseAccumulator rhs;
    for (const auto& [f, v] : p.element) {
        for (const auto& [c, z] : h.algebra.unit_sparse()) rhs.add(f * m + c, v * z);
    }
    bool coinv = lhs.finish() == rhs.finish();
    r.add("coinvariance", coinv, coinv ? "" : "p1_(0) (x) p2_(0) (x) p1_(1) p2_(1) != p (x) 1");
    // Cyclic identity in K (x) H (x) K^op.
    SparseAccumulator cl, cr;
    auto cols = h.antipode.columns();
    for (const auto& [f, v] : p.element) {
        std::size_t i = f / n, j = f % n;
        for (const auto& [a, ha, x] : co[i]) cl.add((a * m + ha) * n + j, v * x);
        for (const auto& [b, hb, y] : co[j]) {
            for (const auto& [s, w] : cols[hb]) cr.add((i * m + s) * n + b, v * y * w);
        }
    }
    bool cyc = cl.finish() == cr.finish();
    r.add(side == Side::Right ? "right cyclic identity" : "left cyclic identity", cyc,
          cyc ? "" : "p1_(0) (x) p1_(h) (x) p2 != p1 (x) S(p2_(h)) (x) p2_(0)");
    return r;
}

SeparabilityIdempotent tensor_idempotent(const SeparabilityIdempotent& p, const SeparabilityIdempotent& q) {
    std::size_t na = p.dim, nb = q.dim, n = na * nb;
    SparseAccumulator acc;
    for (const auto& [f, v] : p.element) {
        for (const auto& [g, w] : q.element) {
            std::size_t first = (f / na) * nb + g / nb;
            std::size_t second = (f % na) * nb + g % nb;
            acc.add(first * n + second, v * w);
        }
    }
    return SeparabilityIdempotent{n, acc.finish()};
}

}  // namespace kitaev
