#include "kitaev/comodule.hpp"

#include "kitaev/error.hpp"

#include <algorithm>

namespace kitaev {

std::vector<BicomoduleAlgebraData::Term> BicomoduleAlgebraData::terms(std::size_t k) const {
    std::vector<Term> out;
    std::size_t nk = dim(), nr = right_dim();
    for (const auto& [f, v] : coaction[k]) {
        out.push_back({f / (nk * nr), (f / nr) % nk, f % nr, v});
    }
    return out;
}

SparseVec BicomoduleAlgebraData::left_coaction(std::size_t k) const {
    SparseAccumulator acc;
    for (const auto& t : terms(k)) acc.add(t.left * dim() + t.middle, t.coeff * right_hopf->counit[t.right]);
    return acc.finish();
}

SparseVec BicomoduleAlgebraData::right_coaction(std::size_t k) const {
    SparseAccumulator acc;
    for (const auto& t : terms(k)) {
        acc.add(t.middle * right_dim() + t.right, t.coeff * left_hopf->counit[t.left]);
    }
    return acc.finish();
}

bool BicomoduleAlgebraData::operator==(const BicomoduleAlgebraData& other) const {
    return algebra == other.algebra && same_hopf(left_hopf, other.left_hopf) &&
           same_hopf(right_hopf, other.right_hopf) && coaction == other.coaction;
}

BicomoduleAlgebraData regular_bicomodule(const HopfPtr& h) {
    std::size_t n = h->dim();
    std::vector<SparseVec> coaction(n);
    for (std::size_t i = 0; i < n; ++i) {
        coaction[i] = h->iterated_coproduct(SparseVec{{i, Rational(1)}}, 3);
    }
    return BicomoduleAlgebraData{h->algebra, h, h, std::move(coaction)};
}

BicomoduleAlgebraData trivial_bicomodule(const HopfPtr& left, const HopfPtr& right) {
    SparseAccumulator acc;
    for (const auto& [a, x] : left->algebra.unit_sparse()) {
        for (const auto& [b, y] : right->algebra.unit_sparse()) acc.add(a * right->dim() + b, x * y);
    }
    return BicomoduleAlgebraData{trivial_algebra(), left, right, {acc.finish()}};
}

Cocycle klein_sign_cocycle() {
    Cocycle z;
    for (std::size_t u = 0; u < 4; ++u) {
        for (std::size_t v = 0; v < 4; ++v) z[{u, v}] = ((u % 2) * (v / 2)) % 2 ? -1 : 1;
    }
    return z;
}

BicomoduleAlgebraData twisted_subgroup_algebra(const GroupTable& g, const HopfPtr& kg,
                                               const std::vector<std::size_t>& subgroup,
                                               const Cocycle& zeta) {
    if (kg->dim() != g.order()) throw Error(ErrorKind::DimensionMismatch, "group algebra does not match table");
    std::size_t m = subgroup.size();
    std::vector<std::size_t> pos(g.order(), m);
    for (std::size_t i = 0; i < m; ++i) {
        if (subgroup[i] >= g.order()) throw Error(ErrorKind::NotSubgroup, "element out of range");
        if (pos[subgroup[i]] != m) throw Error(ErrorKind::NotSubgroup, "repeated element");
        pos[subgroup[i]] = i;
    }
    if (pos[g.identity()] == m) throw Error(ErrorKind::NotSubgroup, "identity missing");
    for (auto u : subgroup) {
        for (auto v : subgroup) {
            if (pos[g.mul(u, v)] == m) {
                throw Error(ErrorKind::NotSubgroup,
                            "not closed: " + g.labels()[u] + "*" + g.labels()[v]);
            }
        }
    }
    auto z = [&](std::size_t u, std::size_t v) {
        auto it = zeta.find({u, v});
        return it == zeta.end() ? 1 : it->second;
    };
    for (const auto& [key, val] : zeta) {
        if (val != 1 && val != -1) throw Error(ErrorKind::NotCocycle, "values must be +1 or -1");
    }
    for (auto u : subgroup) {
        if (z(g.identity(), u) != 1 || z(u, g.identity()) != 1) {
            throw Error(ErrorKind::NotCocycle, "not normalized at " + g.labels()[u]);
        }
        for (auto v : subgroup) {
            for (auto w : subgroup) {
                if (z(u, v) * z(g.mul(u, v), w) != z(v, w) * z(u, g.mul(v, w))) {
                    throw Error(ErrorKind::NotCocycle, "fails at (" + g.labels()[u] + "," +
                                                           g.labels()[v] + "," + g.labels()[w] + ")");
                }
            }
        }
    }
    std::vector<std::string> labels;
    for (auto u : subgroup) labels.push_back(g.labels()[u]);
    std::vector<SparseVec> products(m * m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            std::size_t u = subgroup[i], v = subgroup[j];
            products[i * m + j] = {{pos[g.mul(u, v)], Rational(z(u, v))}};
        }
    }
    AlgebraData alg = make_algebra(m, std::move(labels), std::move(products), basis_vec(m, pos[g.identity()]));
    std::size_t n = g.order();
    std::vector<SparseVec> coaction(m);
    for (std::size_t i = 0; i < m; ++i) {
        std::size_t u = subgroup[i];
        coaction[i] = {{(u * m + i) * n + u, Rational(1)}};
    }
    return BicomoduleAlgebraData{std::move(alg), kg, kg, std::move(coaction)};
}

BicomoduleAlgebraData opposite_bicomodule(const BicomoduleAlgebraData& k) {
    auto left = std::make_shared<const HopfAlgebraData>(op_cop(*k.right_hopf));
    auto right = std::make_shared<const HopfAlgebraData>(op_cop(*k.left_hopf));
    BicomoduleAlgebraData out{opposite_algebra(k.algebra), left, right, {}};
    out.coaction.resize(k.dim());
    for (std::size_t i = 0; i < k.dim(); ++i) {
        SparseAccumulator acc;
        for (const auto& t : k.terms(i)) acc.add(out.flat(t.right, t.middle, t.left), t.coeff);
        out.coaction[i] = acc.finish();
    }
    return out;
}

namespace {

std::string at(std::size_t i) { return "at k" + std::to_string(i); }

}  // namespace

Report validate_bicomodule(const BicomoduleAlgebraData& k) {
    Report r = validate_algebra(k.algebra);
    const auto& hl = *k.left_hopf;
    const auto& hr = *k.right_hopf;
    std::size_t nk = k.dim(), nl = hl.dim(), nr = hr.dim();
    if (k.coaction.size() != nk) {
        r.fail("coaction size", "expected one entry per basis element");
        return r;
    }

    auto run = [&](const std::string& name, auto&& check) {
        for (std::size_t i = 0; i < nk; ++i) {
            if (!check(i)) {
                r.fail(name, at(i));
                return;
            }
        }
        r.pass(name);
    };

    std::vector<SparseVec> rl(nk), rr(nk);
    for (std::size_t i = 0; i < nk; ++i) {
        rl[i] = k.left_coaction(i);
        rr[i] = k.right_coaction(i);
    }

    run("coactions commute", [&](std::size_t i) {
        // (id (x) rho_R) rho_L and (rho_L (x) id) rho_R must both equal the combined coaction.
        SparseAccumulator a, b;
        for (const auto& [f, v] : rl[i]) {
            std::size_t h = f / nk, m = f % nk;
            for (const auto& [g, w] : rr[m]) a.add((h * nk + g / nr) * nr + g % nr, v * w);
        }
        for (const auto& [f, v] : rr[i]) {
            std::size_t m = f / nr, h = f % nr;
            for (const auto& [g, w] : rl[m]) b.add(((g / nk) * nk + g % nk) * nr + h, v * w);
        }
        return a.finish() == k.coaction[i] && b.finish() == k.coaction[i];
    });
    run("left coassociativity", [&](std::size_t i) {
        SparseAccumulator a, b;
        for (const auto& [f, v] : rl[i]) {
            std::size_t h = f / nk, m = f % nk;
            for (const auto& [g, w] : hl.comult[h]) a.add(g * nk + m, v * w);
            for (const auto& [g, w] : rl[m]) b.add(h * nl * nk + g, v * w);
        }
        return a.finish() == b.finish();
    });
    run("right coassociativity", [&](std::size_t i) {
        SparseAccumulator a, b;
        for (const auto& [f, v] : rr[i]) {
            std::size_t m = f / nr, h = f % nr;
            for (const auto& [g, w] : hr.comult[h]) a.add(m * nr * nr + g, v * w);
            for (const auto& [g, w] : rr[m]) b.add(g * nr + h, v * w);
        }
        return a.finish() == b.finish();
    });
    run("counit laws", [&](std::size_t i) {
        SparseAccumulator a, b;
        for (const auto& [f, v] : rl[i]) a.add(f % nk, v * hl.counit[f / nk]);
        for (const auto& [f, v] : rr[i]) b.add(f / nr, v * hr.counit[f % nr]);
        SparseVec e{{i, Rational(1)}};
        return a.finish() == e && b.finish() == e;
    });

    // Multiplicativity in H1 (x) K (x) H2.
    auto mult3 = [&](const SparseVec& x, const SparseVec& y) {
        SparseAccumulator acc;
        for (const auto& [p, u] : x) {
            std::size_t a1 = p / (nk * nr), k1 = (p / nr) % nk, b1 = p % nr;
            for (const auto& [q, w] : y) {
                std::size_t a2 = q / (nk * nr), k2 = (q / nr) % nk, b2 = q % nr;
                Rational c = u * w;
                for (const auto& [a, s] : hl.algebra.product(a1, a2)) {
                    for (const auto& [m, t] : k.algebra.product(k1, k2)) {
                        for (const auto& [b, z] : hr.algebra.product(b1, b2)) acc.add(k.flat(a, m, b), c * s * t * z);
                    }
                }
            }
        }
        return acc.finish();
    };
    bool mult_ok = true;
    for (std::size_t i = 0; i < nk && mult_ok; ++i) {
        for (std::size_t j = 0; j < nk && mult_ok; ++j) {
            SparseAccumulator lhs;
            for (const auto& [m, v] : k.algebra.product(i, j)) lhs.add(k.coaction[m], v);
            if (lhs.finish() != mult3(k.coaction[i], k.coaction[j])) {
                r.fail("coaction is multiplicative", "at (k" + std::to_string(i) + ",k" + std::to_string(j) + ")");
                mult_ok = false;
            }
        }
    }
    if (mult_ok) r.pass("coaction is multiplicative");

    SparseAccumulator img, expect;
    for (const auto& [m, v] : k.algebra.unit_sparse()) img.add(k.coaction[m], v);
    for (const auto& [a, x] : hl.algebra.unit_sparse()) {
        for (const auto& [m, y] : k.algebra.unit_sparse()) {
            for (const auto& [b, z] : hr.algebra.unit_sparse()) expect.add(k.flat(a, m, b), x * y * z);
        }
    }
    bool unit_ok = img.finish() == expect.finish();
    r.add("coaction preserves unit", unit_ok, unit_ok ? "" : "rho(1) != 1 (x) 1 (x) 1");
    return r;
}

}  // namespace kitaev
