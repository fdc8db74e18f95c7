#include "kitaev/balancing.hpp"

#include "kitaev/crossed.hpp"
#include "kitaev/error.hpp"

namespace kitaev {

SparseMatrix HModule::act(const SparseVec& h) const {
    SparseMatrix out(dim, dim);
    for (const auto& [i, c] : h) out = out + action[i].scaled(c);
    return out;
}

HModule trivial_hmodule(const HopfAlgebraData& h) {
    HModule m{1, {}};
    for (std::size_t i = 0; i < h.dim(); ++i) {
        m.action.push_back(SparseMatrix::from_dense({Vec{h.counit[i]}}));
    }
    return m;
}

HModule regular_hmodule(const HopfAlgebraData& h) {
    HModule m{h.dim(), {}};
    for (std::size_t i = 0; i < h.dim(); ++i) {
        m.action.push_back(h.algebra.left_multiplication(SparseVec{{i, Rational(1)}}));
    }
    return m;
}

HModule tensor_hmodule(const HopfAlgebraData& h, const HModule& x, const HModule& y) {
    HModule m{x.dim * y.dim, {}};
    std::size_t n = h.dim();
    for (std::size_t i = 0; i < n; ++i) {
        SparseMatrix a(m.dim, m.dim);
        for (const auto& [f, c] : h.comult[i]) a = a + kron(x.action[f / n], y.action[f % n]).scaled(c);
        m.action.push_back(std::move(a));
    }
    return m;
}

namespace {

SparseVec basis(std::size_t i) { return SparseVec{{i, Rational(1)}}; }

SparseMatrix combination(const std::vector<SparseMatrix>& mats, const SparseVec& x, std::size_t dim) {
    SparseMatrix out(dim, dim);
    for (const auto& [i, c] : x) out = out + mats[i].scaled(c);
    return out;
}

std::string index_detail(const std::string& what, std::size_t i, std::size_t j) {
    return "at (" + what + std::to_string(i) + "," + what + std::to_string(j) + ")";
}

}  // namespace

Report validate_crossed_module(const CrossedModule& m) {
    Report r;
    const HopfAlgebraData& h = *m.hopf;
    const BicomoduleAlgebraData& k = *m.comodule;
    std::size_t n = h.dim(), nk = k.dim(), d = m.dim;
    bool shapes = m.dual_action.size() == n && m.k_action.size() == nk;
    for (const auto& a : m.dual_action) shapes = shapes && a.rows() == d && a.cols() == d;
    for (const auto& a : m.k_action) shapes = shapes && a.rows() == d && a.cols() == d;
    r.add("shapes", shapes, shapes ? "" : "one square matrix per basis element expected");
    if (!shapes) return r;
    auto hl = std::make_shared<const HopfAlgebraData>(signed_hopf(h, m.eps));
    auto hr = std::make_shared<const HopfAlgebraData>(signed_hopf(h, m.eps_prime));
    bool legs = same_hopf(k.left_hopf, hl) && same_hopf(k.right_hopf, hr);
    r.add("comodule legs", legs, legs ? "" : "K is not an H^eps-H^eps' bicomodule algebra");
    if (!legs) return r;

    HopfAlgebraData dual = dual_hopf(h);
    std::string bad;
    for (std::size_t i = 0; i < n && bad.empty(); ++i) {
        for (std::size_t j = 0; j < n && bad.empty(); ++j) {
            if (m.dual_action[i] * m.dual_action[j] != combination(m.dual_action, dual.algebra.product(i, j), d)) {
                bad = index_detail("e^", i, j);
            }
        }
    }
    if (bad.empty() && combination(m.dual_action, to_sparse(h.counit), d) != SparseMatrix::identity(d)) {
        bad = "counit does not act as the identity";
    }
    r.add("H^* representation", bad.empty(), bad);
    bad.clear();
    for (std::size_t i = 0; i < nk && bad.empty(); ++i) {
        for (std::size_t j = 0; j < nk && bad.empty(); ++j) {
            if (m.k_action[i] * m.k_action[j] != combination(m.k_action, k.algebra.product(i, j), d)) {
                bad = index_detail("k", i, j);
            }
        }
    }
    if (bad.empty() && combination(m.k_action, k.algebra.unit_sparse(), d) != SparseMatrix::identity(d)) {
        bad = "unit of K does not act as the identity";
    }
    r.add("K representation", bad.empty(), bad);
    bad.clear();
    // k f = f(<k_(1)>^{-eps'} ? <k_(-1)>^{eps}) k_(0)
    for (std::size_t kk = 0; kk < nk && bad.empty(); ++kk) {
        auto terms = k.terms(kk);
        for (std::size_t a = 0; a < n && bad.empty(); ++a) {
            SparseMatrix rhs(d, d);
            for (const auto& t : terms) {
                SparseVec f = twisted_functional(h, a, h.signed_power(basis(t.right), -m.eps_prime),
                                                 h.signed_power(basis(t.left), m.eps));
                rhs = rhs + (combination(m.dual_action, f, d) * m.k_action[t.middle]).scaled(t.coeff);
            }
            if (m.k_action[kk] * m.dual_action[a] != rhs) bad = "at (k" + std::to_string(kk) + ",e^" + std::to_string(a) + ")";
        }
    }
    r.add("straightening", bad.empty(), bad);
    return r;
}

CrossedModule regular_crossed_module(const HopfPtr& h, int eps, int eps_prime, const BicomodulePtr& k) {
    HopfPtr acting = balancing_hopf(h, eps_prime, eps);
    BalancingAlgebra bal = balancing_algebra(h, eps_prime, eps);
    CrossedProductAlgebra c = crossed_product(bal.as_module_algebra, site_comodule_single(*k, acting));
    CrossedModule m{h, eps, eps_prime, k, c.product.dim, {}, {}};
    SparseVec unit_k = k->algebra.unit_sparse();
    for (std::size_t a = 0; a < h->dim(); ++a) {
        SparseVec x;
        for (const auto& [u, w] : unit_k) x.emplace_back(c.index(a, u), w);
        m.dual_action.push_back(c.product.left_multiplication(x));
    }
    for (std::size_t kk = 0; kk < k->dim(); ++kk) {
        SparseAccumulator x;
        for (std::size_t a = 0; a < h->dim(); ++a) x.add(c.index(a, kk), h->counit[a]);
        m.k_action.push_back(c.product.left_multiplication(x.finish()));
    }
    return m;
}

SparseMatrix balancing_matrix(const CrossedModule& m, const HModule& x) {
    std::size_t dm = m.dim, dx = x.dim;
    std::vector<Triplet> t;
    for (std::size_t i = 0; i < m.dual_action.size(); ++i) {
        const SparseMatrix& rho = m.dual_action[i];
        const SparseMatrix& act = x.action[i];
        for (std::size_t m2 = 0; m2 < dm; ++m2) {
            for (const auto& [m1, a] : rho.row(m2)) {
                for (std::size_t x2 = 0; x2 < dx; ++x2) {
                    for (const auto& [x1, b] : act.row(x2)) t.push_back({m2 * dx + x2, x1 * dm + m1, a * b});
                }
            }
        }
    }
    return SparseMatrix::from_triplets(dm * dx, dx * dm, t);
}

BalancingFamily balancing_from_module(const CrossedModule& m) {
    Report r = validate_crossed_module(m);
    if (!r.ok()) {
        const Check* c = r.first_failure();
        throw Error(ErrorKind::ModuleInvalid, c->name + (c->detail.empty() ? "" : " " + c->detail));
    }
    BalancingFamily b{m.hopf, m.eps, m.eps_prime, m.comodule, m.dim, m.k_action, {}};
    b.beta = [m](const HModule& x) { return balancing_matrix(m, x); };
    return b;
}

CrossedModule module_from_balancing(const BalancingFamily& b) {
    const HopfAlgebraData& h = *b.hopf;
    std::size_t n = h.dim(), dm = b.dim;
    SparseMatrix beta = b.beta(regular_hmodule(h));
    if (beta.rows() != dm * n || beta.cols() != n * dm) {
        throw Error(ErrorKind::DimensionMismatch, "balancing on H_reg has the wrong shape");
    }
    // rho(e^j)[m', m] = sum_u 1_u beta[(m', j), (u, m)]
    const Vec& unit = h.algebra.unit;
    std::vector<std::vector<Triplet>> t(n);
    for (std::size_t row = 0; row < beta.rows(); ++row) {
        std::size_t m2 = row / n, j = row % n;
        for (const auto& [col, v] : beta.row(row)) {
            std::size_t u = col / dm, m1 = col % dm;
            if (!is_zero(unit[u])) t[j].push_back({m2, m1, v * unit[u]});
        }
    }
    CrossedModule m{b.hopf, b.eps, b.eps_prime, b.comodule, dm, {}, b.k_action};
    for (std::size_t j = 0; j < n; ++j) m.dual_action.push_back(SparseMatrix::from_triplets(dm, dm, t[j]));
    Report r = validate_crossed_module(m);
    if (!r.ok()) {
        const Check* c = r.first_failure();
        throw Error(ErrorKind::NotAModule, c->name + (c->detail.empty() ? "" : " " + c->detail));
    }
    return m;
}

std::vector<std::pair<std::string, HModule>> test_family(const HopfAlgebraData& h) {
    HModule reg = regular_hmodule(h);
    return {{"k", trivial_hmodule(h)}, {"H_reg", reg}, {"H_reg(x)H_reg", tensor_hmodule(h, reg, reg)}};
}

Report check_balancing(const BalancingFamily& b) {
    Report r;
    const HopfAlgebraData& h = *b.hopf;
    const BicomoduleAlgebraData& k = *b.comodule;
    std::size_t n = h.dim(), dm = b.dim;
    auto family = test_family(h);
    std::vector<SparseMatrix> betas;
    for (const auto& [name, x] : family) betas.push_back(b.beta(x));
    SparseMatrix id_m = SparseMatrix::identity(dm);

    bool tri = betas[0] == id_m;
    r.add("triangle", tri, tri ? "" : "beta_k is not the identity");

    std::string bad;
    for (std::size_t i = 0; i < family.size(); ++i) {
        for (std::size_t j = 0; j < family.size(); ++j) {
            const HModule& x = family[i].second;
            const HModule& y = family[j].second;
            SparseMatrix lhs = b.beta(tensor_hmodule(h, x, y));
            SparseMatrix rhs = kron(betas[i], SparseMatrix::identity(y.dim)) * kron(SparseMatrix::identity(x.dim), betas[j]);
            if (lhs != rhs && bad.empty()) bad = "X = " + family[i].first + ", Y = " + family[j].first;
        }
    }
    r.add("hexagon", bad.empty(), bad);

    // Morphisms f : X -> Y between family members.
    struct Morphism {
        std::string name;
        std::size_t from, to;
        SparseMatrix f;
    };
    std::vector<Morphism> morphisms;
    for (std::size_t g = 0; g < n; ++g) {
        morphisms.push_back({"right multiplication by b" + std::to_string(g), 1, 1,
                             h.algebra.right_multiplication(basis(g))});
    }
    morphisms.push_back({"counit", 1, 0, SparseMatrix::from_dense({h.counit})});
    Vec lambda = haar_integral(h).element;
    std::vector<Vec> col;
    for (const auto& v : lambda) col.push_back(Vec{v});
    morphisms.push_back({"integral", 0, 1, SparseMatrix::from_dense(col)});
    morphisms.push_back({"coproduct", 1, 2, SparseMatrix::from_columns(n * n, h.comult)});
    bad.clear();
    for (const auto& mor : morphisms) {
        const HModule& x = family[mor.from].second;
        const HModule& y = family[mor.to].second;
        bool is_morphism = true;
        for (std::size_t g = 0; g < n; ++g) is_morphism = is_morphism && mor.f * x.action[g] == y.action[g] * mor.f;
        if (!is_morphism) throw Error(ErrorKind::PropertyCheckFailed, mor.name + " is not an H-module morphism");
        if (betas[mor.to] * kron(mor.f, id_m) != kron(id_m, mor.f) * betas[mor.from] && bad.empty()) bad = mor.name;
    }
    r.add("naturality", bad.empty(), bad);

    // K acts on X (x) M by <k_(-1)>^eps (x) k_(0) and on M (x) X by k_(0) (x) <k_(1)>^eps'.
    bad.clear();
    for (std::size_t i = 0; i < family.size() && bad.empty(); ++i) {
        const HModule& x = family[i].second;
        for (std::size_t kk = 0; kk < k.dim() && bad.empty(); ++kk) {
            SparseMatrix before(x.dim * dm, x.dim * dm), after(dm * x.dim, dm * x.dim);
            for (const auto& t : k.terms(kk)) {
                before = before + kron(x.act(h.signed_power(basis(t.left), b.eps)), b.k_action[t.middle]).scaled(t.coeff);
                after = after + kron(b.k_action[t.middle], x.act(h.signed_power(basis(t.right), b.eps_prime))).scaled(t.coeff);
            }
            if (betas[i] * before != after * betas[i]) bad = "X = " + family[i].first + ", k" + std::to_string(kk);
        }
    }
    r.add("K-linearity", bad.empty(), bad);

    bad.clear();
    for (std::size_t i = 0; i < family.size(); ++i) {
        if (rank(betas[i]) != betas[i].rows() && bad.empty()) bad = "X = " + family[i].first;
    }
    r.add("invertible", bad.empty(), bad);
    return r;
}

namespace {

std::string same_family(const BalancingFamily& a, const BalancingFamily& b) {
    for (const auto& [name, x] : test_family(*a.hopf)) {
        if (a.beta(x) != b.beta(x)) return "X = " + name;
    }
    return {};
}

}  // namespace

Report check_round_trips(const CrossedModule& m) {
    Report r;
    BalancingFamily b = balancing_from_module(m);
    CrossedModule back = module_from_balancing(b);
    bool same = back.dual_action == m.dual_action && back.k_action == m.k_action;
    r.add("module round trip", same, same ? "" : "reconstructed H^* action differs");
    std::string bad = same_family(b, balancing_from_module(back));
    r.add("balancing round trip", bad.empty(), bad);
    return r;
}

Report check_round_trips(const BalancingFamily& b) {
    Report r;
    CrossedModule m = module_from_balancing(b);
    BalancingFamily back = balancing_from_module(m);
    std::string bad = same_family(b, back);
    r.add("balancing round trip", bad.empty(), bad);
    bool same = module_from_balancing(back).dual_action == m.dual_action;
    r.add("module round trip", same, same ? "" : "reconstructed H^* action differs");
    return r;
}

namespace {

// K_v as an H_p^eps-H_p^eps' bicomodule algebra: the left leg of e_p, the right leg of e'_p,
// and the counit on every other leg.
BicomodulePtr site_bicomodule(const VertexAlgebra& cv, std::size_t i) {
    const VertexSite& site = cv.site(i);
    const MixedRadix& er = cv.edge_radix();
    AlgebraData alg = cv.edge_algebra(0);
    for (std::size_t j = 1; j < cv.num_edges(); ++j) alg = tensor_algebra(alg, cv.edge_algebra(j));
    const auto& kr = *cv.edge(site.right_factor).algebra;
    const auto& kl = *cv.edge(site.left_factor).algebra;
    BicomoduleAlgebraData out{std::move(alg), kr.left_hopf, kl.right_hopf, {}};
    for (std::uint64_t kk = 0; kk < er.size(); ++kk) {
        struct Partial {
            Rational coeff;
            std::size_t left, middle, right;
        };
        std::vector<Partial> cur{{Rational(1), 0, 0, 0}};
        for (std::size_t j = 0; j < cv.num_edges(); ++j) {
            const auto& kj = *cv.edge(j).algebra;
            std::vector<Partial> next;
            for (const auto& p : cur) {
                for (const auto& t : kj.terms(er.digit(kk, j))) {
                    Rational c = p.coeff * t.coeff;
                    if (j != site.right_factor) c *= kj.left_hopf->counit[t.left];
                    if (j != site.left_factor) c *= kj.right_hopf->counit[t.right];
                    if (is_zero(c)) continue;
                    next.push_back({c, j == site.right_factor ? t.left : p.left, p.middle * kj.dim() + t.middle,
                                    j == site.left_factor ? t.right : p.right});
                }
            }
            cur = std::move(next);
        }
        SparseAccumulator acc;
        for (const auto& p : cur) acc.add(out.flat(p.left, p.middle, p.right), p.coeff);
        out.coaction.push_back(acc.finish());
    }
    return std::make_shared<const BicomoduleAlgebraData>(std::move(out));
}

}  // namespace

Report verify_gluing_equivalence(const VertexAlgebra& cv, const VertexModule& m) {
    Report r;
    const MixedRadix& er = cv.edge_radix();
    std::vector<SparseMatrix> kappa;
    for (std::uint64_t kk = 0; kk < er.size(); ++kk) {
        SparseMatrix a = SparseMatrix::identity(m.dim);
        for (std::size_t j = 0; j < cv.num_edges(); ++j) a = a * m.edge_actions[j][er.digit(kk, j)];
        kappa.push_back(std::move(a));
    }
    for (std::size_t i = 0; i < cv.num_sites(); ++i) {
        const VertexSite& site = cv.site(i);
        std::string name = "site " + std::to_string(i);
        CrossedModule cm{site.hopf, site.eps_right, site.eps_left, site_bicomodule(cv, i), m.dim,
                         m.site_actions[i], kappa};
        Report valid = validate_crossed_module(cm);
        if (!valid.ok()) {
            const Check* c = valid.first_failure();
            r.fail(name, c->name + (c->detail.empty() ? "" : " " + c->detail));
            continue;
        }
        r.pass(name);
        r.merge(check_balancing(balancing_from_module(cm)), name);
        r.merge(check_round_trips(cm), name);
    }
    return r;
}

Report verify_gluing_equivalence(const LabeledSurface& s, std::size_t v) {
    VertexAlgebraPtr cv = vertex_algebra(s, v);
    return verify_gluing_equivalence(*cv, regular_module(*cv));
}

}  // namespace kitaev
