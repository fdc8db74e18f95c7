#include "kitaev/vertex.hpp"

#include "kitaev/error.hpp"

#include <deque>

namespace kitaev {

namespace {

SparseVec basis_sparse(std::size_t i) { return SparseVec{{i, Rational(1)}}; }

using MultiTerms = std::vector<std::pair<Rational, std::vector<std::size_t>>>;

// Product of basis multi-indices in a tensor product of algebras.
MultiTerms multiply_multi(const std::vector<const AlgebraData*>& algebras, const std::vector<std::size_t>& x,
                          const std::vector<std::size_t>& y) {
    MultiTerms out{{Rational(1), {}}};
    for (std::size_t i = 0; i < algebras.size(); ++i) {
        const SparseVec& p = algebras[i]->product(x[i], y[i]);
        MultiTerms next;
        for (const auto& [c, idx] : out) {
            for (const auto& [b, v] : p) {
                auto n = idx;
                n.push_back(b);
                next.emplace_back(c * v, std::move(n));
            }
        }
        out = std::move(next);
    }
    return out;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? sep : "") + parts[i];
    return s;
}

}  // namespace

VertexAlgebra::VertexAlgebra(std::size_t vertex, std::vector<VertexSite> sites, std::vector<VertexEdge> edges)
    : vertex_(vertex), sites_(std::move(sites)), edges_(std::move(edges)) {
    std::vector<std::size_t> sdims, edims;
    for (auto& s : sites_) {
        if (s.right_factor >= edges_.size() || s.left_factor >= edges_.size()) {
            throw Error(ErrorKind::DimensionMismatch, "site refers to a missing edge factor");
        }
        s.eps_right = edges_[s.right_factor].sign;
        s.eps_left = edges_[s.left_factor].sign;
        const auto& kr = *edges_[s.right_factor].algebra;
        const auto& kl = *edges_[s.left_factor].algebra;
        if (!(*kr.left_hopf == signed_hopf(*s.hopf, s.eps_right)) ||
            !(*kl.right_hopf == signed_hopf(*s.hopf, s.eps_left))) {
            throw Error(ErrorKind::HopfMismatch, "edge legs do not match the Hopf algebra of site " +
                                                     std::to_string(s.site_id));
        }
        duals_.push_back(dual_hopf(*s.hopf));
        sdims.push_back(s.hopf->dim());
    }
    for (const auto& e : edges_) edims.push_back(e.algebra->dim());
    site_radix_ = MixedRadix(sdims);
    edge_radix_ = MixedRadix(edims);

    for (const auto& s : sites_) {
        const auto& h = *s.hopf;
        std::size_t n = h.dim(), n1 = n + 1;
        std::vector<SparseVec> table(n * n1 * n1);
        for (std::size_t b = 0; b < n1; ++b) {
            SparseVec left = b == n ? h.algebra.unit_sparse() : h.signed_power(basis_sparse(b), -s.eps_left);
            for (std::size_t a = 0; a < n1; ++a) {
                SparseVec right = a == n ? h.algebra.unit_sparse() : h.signed_power(basis_sparse(a), s.eps_right);
                std::vector<SparseAccumulator> acc(n);
                for (std::size_t c = 0; c < n; ++c) {
                    for (const auto& [f, v] : h.algebra.multiply(h.algebra.multiply(left, basis_sparse(c)), right)) {
                        acc[f].add(c, v);
                    }
                }
                for (std::size_t f = 0; f < n; ++f) table[(f * n1 + b) * n1 + a] = acc[f].finish();
            }
        }
        twisted_.push_back(std::move(table));
    }
    for (const auto& e : edges_) {
        std::vector<std::vector<BicomoduleAlgebraData::Term>> per;
        for (std::size_t k = 0; k < e.algebra->dim(); ++k) per.push_back(e.algebra->terms(k));
        legs_.push_back(std::move(per));
    }
}

const SparseVec& VertexAlgebra::twisted(std::size_t site, std::size_t f, std::size_t b, std::size_t a) const {
    std::size_t n1 = sites_[site].hopf->dim() + 1;
    return twisted_[site][(f * n1 + b) * n1 + a];
}

std::vector<VertexAlgebra::Term> VertexAlgebra::straighten(std::size_t j, std::size_t k,
                                                           const std::vector<std::size_t>& f) const {
    std::vector<Term> out;
    for (const auto& t : legs_[j][k]) {
        std::vector<std::pair<Rational, std::vector<std::size_t>>> acc{{t.coeff, f}};
        for (std::size_t i = 0; i < sites_.size(); ++i) {
            const auto& s = sites_[i];
            bool right = s.right_factor == j, left = s.left_factor == j;
            if (!right && !left) continue;
            std::size_t n = s.hopf->dim();
            const SparseVec& tw = twisted(i, f[i], left ? t.right : n, right ? t.left : n);
            std::vector<std::pair<Rational, std::vector<std::size_t>>> next;
            for (const auto& [c, idx] : acc) {
                for (const auto& [g, v] : tw) {
                    auto m = idx;
                    m[i] = g;
                    next.emplace_back(c * v, std::move(m));
                }
            }
            acc = std::move(next);
        }
        for (auto& [c, idx] : acc) out.push_back({c, std::move(idx), t.middle});
    }
    return out;
}

std::vector<VertexAlgebra::SiteTerm> VertexAlgebra::straighten_site(std::size_t j, std::size_t k, std::size_t site,
                                                                    std::size_t f) const {
    const auto& s = sites_[site];
    const auto& e = *edges_[j].algebra;
    bool right = s.right_factor == j, left = s.left_factor == j;
    std::size_t n = s.hopf->dim();
    std::vector<SiteTerm> out;
    for (const auto& t : legs_[j][k]) {
        // Legs that belong to other sites meet their unit and reduce to the counit.
        Rational c = t.coeff;
        if (!right) c *= e.left_hopf->counit[t.left];
        if (!left) c *= e.right_hopf->counit[t.right];
        if (is_zero(c)) continue;
        SparseVec g = (right || left) ? twisted(site, f, left ? t.right : n, right ? t.left : n) : basis_sparse(f);
        out.push_back({c, std::move(g), t.middle});
    }
    return out;
}

AlgebraData VertexAlgebra::materialize(std::uint64_t max_dim) const {
    std::uint64_t n = dim();
    if (n > max_dim) {
        throw Error(ErrorKind::DimensionGuardExceeded, "vertex algebra of dimension " + std::to_string(n));
    }
    std::vector<const AlgebraData*> salg, ealg;
    for (std::size_t i = 0; i < sites_.size(); ++i) salg.push_back(&duals_[i].algebra);
    for (const auto& e : edges_) ealg.push_back(&e.algebra->algebra);
    std::uint64_t ne = edge_dim();

    std::vector<std::string> labels;
    for (std::uint64_t x = 0; x < n; ++x) {
        auto f = site_radix_.unflat(x / ne);
        auto k = edge_radix_.unflat(x % ne);
        std::vector<std::string> a, b;
        for (std::size_t i = 0; i < f.size(); ++i) a.push_back(salg[i]->basis_labels[f[i]]);
        for (std::size_t j = 0; j < k.size(); ++j) b.push_back(ealg[j]->basis_labels[k[j]]);
        labels.push_back(join(a, "*") + "#" + join(b, "*"));
    }

    std::vector<SparseVec> products(n * n);
    for (std::uint64_t x = 0; x < n; ++x) {
        auto f1 = site_radix_.unflat(x / ne);
        auto k1 = edge_radix_.unflat(x % ne);
        for (std::uint64_t y = 0; y < n; ++y) {
            auto f2 = site_radix_.unflat(y / ne);
            auto k2 = edge_radix_.unflat(y % ne);
            // Move K1 past F2 one factor at a time, last factor first.
            std::vector<std::tuple<Rational, std::vector<std::size_t>, std::vector<std::size_t>>> terms{
                {Rational(1), f2, std::vector<std::size_t>(k1.size(), 0)}};
            for (std::size_t j = edges_.size(); j-- > 0;) {
                decltype(terms) next;
                for (const auto& [c, f, kacc] : terms) {
                    for (const auto& t : straighten(j, k1[j], f)) {
                        auto kk = kacc;
                        kk[j] = t.k0;
                        next.emplace_back(c * t.coeff, t.f, std::move(kk));
                    }
                }
                terms = std::move(next);
            }
            SparseAccumulator acc;
            for (const auto& [c, f, kacc] : terms) {
                for (const auto& [cf, ff] : multiply_multi(salg, f1, f)) {
                    for (const auto& [ck, kk] : multiply_multi(ealg, kacc, k2)) {
                        acc.add(site_radix_.flat(ff) * ne + edge_radix_.flat(kk), c * cf * ck);
                    }
                }
            }
            products[x * n + y] = acc.finish();
        }
    }
    SparseAccumulator unit;
    {
        MultiTerms u{{Rational(1), {}}};
        std::vector<const AlgebraData*> all = salg;
        all.insert(all.end(), ealg.begin(), ealg.end());
        for (const auto* a : all) {
            MultiTerms next;
            for (const auto& [c, idx] : u) {
                for (const auto& [b, v] : a->unit_sparse()) {
                    auto m = idx;
                    m.push_back(b);
                    next.emplace_back(c * v, std::move(m));
                }
            }
            u = std::move(next);
        }
        for (const auto& [c, idx] : u) {
            std::vector<std::size_t> f(idx.begin(), idx.begin() + salg.size());
            std::vector<std::size_t> k(idx.begin() + salg.size(), idx.end());
            unit.add(site_radix_.flat(f) * ne + edge_radix_.flat(k), c);
        }
    }
    return make_algebra(n, std::move(labels), std::move(products), to_dense(unit.finish(), n));
}

BalancingAlgebra VertexAlgebra::site_balancing(std::size_t i) const {
    return balancing_algebra(sites_[i].hopf, sites_[i].eps_left, sites_[i].eps_right);
}

SparseMatrix VertexModule::site_action(std::size_t i, const SparseVec& f) const {
    SparseMatrix m(dim, dim);
    for (const auto& [b, v] : f) m = m + site_actions[i][b].scaled(v);
    return m;
}

SparseMatrix VertexModule::edge_action(std::size_t j, const SparseVec& k) const {
    SparseMatrix m(dim, dim);
    for (const auto& [b, v] : k) m = m + edge_actions[j][b].scaled(v);
    return m;
}

SparseMatrix VertexModule::basis_action(const VertexAlgebra& cv, std::uint64_t index) const {
    auto f = cv.site_radix().unflat(index / cv.edge_dim());
    auto k = cv.edge_radix().unflat(index % cv.edge_dim());
    SparseMatrix m = SparseMatrix::identity(dim);
    for (std::size_t i = 0; i < f.size(); ++i) m = m * site_actions[i][f[i]];
    for (std::size_t j = 0; j < k.size(); ++j) m = m * edge_actions[j][k[j]];
    return m;
}

Report validate_vertex_module(const VertexAlgebra& cv, const VertexModule& m) {
    Report r;
    bool shapes = m.site_actions.size() == cv.num_sites() && m.edge_actions.size() == cv.num_edges();
    for (std::size_t i = 0; shapes && i < cv.num_sites(); ++i) {
        shapes = m.site_actions[i].size() == cv.site_algebra(i).dim;
        for (const auto& a : m.site_actions[i]) shapes = shapes && a.rows() == m.dim && a.cols() == m.dim;
    }
    for (std::size_t j = 0; shapes && j < cv.num_edges(); ++j) {
        shapes = m.edge_actions[j].size() == cv.edge_algebra(j).dim;
        for (const auto& a : m.edge_actions[j]) shapes = shapes && a.rows() == m.dim && a.cols() == m.dim;
    }
    r.add("shapes", shapes, shapes ? "" : "action matrices do not match the factors");
    if (!shapes) return r;

    SparseMatrix id = SparseMatrix::identity(m.dim);
    auto representation = [&](const std::string& name, const AlgebraData& a, const std::vector<SparseMatrix>& rho) {
        SparseMatrix unit(m.dim, m.dim);
        for (const auto& [b, v] : a.unit_sparse()) unit = unit + rho[b].scaled(v);
        if (unit != id) {
            r.fail(name, "unit does not act as the identity");
            return;
        }
        for (std::size_t x = 0; x < a.dim; ++x) {
            for (std::size_t y = 0; y < a.dim; ++y) {
                SparseMatrix rhs(m.dim, m.dim);
                for (const auto& [b, v] : a.product(x, y)) rhs = rhs + rho[b].scaled(v);
                if (rho[x] * rho[y] != rhs) {
                    r.fail(name, "fails at (b" + std::to_string(x) + ",b" + std::to_string(y) + ")");
                    return;
                }
            }
        }
        r.pass(name);
    };
    for (std::size_t i = 0; i < cv.num_sites(); ++i) {
        representation("site " + std::to_string(i) + " representation", cv.site_algebra(i), m.site_actions[i]);
    }
    for (std::size_t j = 0; j < cv.num_edges(); ++j) {
        representation("edge " + std::to_string(j) + " representation", cv.edge_algebra(j), m.edge_actions[j]);
    }

    auto commute_all = [&](const std::string& name, const std::vector<std::vector<SparseMatrix>>& ops) {
        for (std::size_t a = 0; a < ops.size(); ++a) {
            for (std::size_t b = a + 1; b < ops.size(); ++b) {
                for (std::size_t x = 0; x < ops[a].size(); ++x) {
                    for (std::size_t y = 0; y < ops[b].size(); ++y) {
                        if (ops[a][x] * ops[b][y] != ops[b][y] * ops[a][x]) {
                            r.fail(name, "factors " + std::to_string(a) + " and " + std::to_string(b));
                            return;
                        }
                    }
                }
            }
        }
        r.pass(name);
    };
    commute_all("site factors commute", m.site_actions);
    commute_all("edge factors commute", m.edge_actions);

    for (std::size_t j = 0; j < cv.num_edges(); ++j) {
        for (std::size_t k = 0; k < cv.edge_algebra(j).dim; ++k) {
            for (std::size_t i = 0; i < cv.num_sites(); ++i) {
                for (std::size_t f = 0; f < cv.site_algebra(i).dim; ++f) {
                    SparseMatrix rhs(m.dim, m.dim);
                    for (const auto& t : cv.straighten_site(j, k, i, f)) {
                        rhs = rhs + (m.site_action(i, t.f) * m.edge_actions[j][t.k0]).scaled(t.coeff);
                    }
                    if (m.edge_actions[j][k] * m.site_actions[i][f] != rhs) {
                        r.fail("straightening", "edge " + std::to_string(j) + " k" + std::to_string(k) + " past site " +
                                                    std::to_string(i) + " f" + std::to_string(f));
                        return r;
                    }
                }
            }
        }
    }
    r.pass("straightening");
    return r;
}

std::optional<Vec> find_character(const BicomoduleAlgebraData& k) {
    for (const auto& h : {k.left_hopf, k.right_hopf}) {
        if (h->dim() == k.dim() && is_character(k.algebra, h->counit)) return h->counit;
    }
    std::size_t n = k.dim();
    if (n > 9) return std::nullopt;
    // Candidate values 1, -1, 0 in that order, so the all-ones functional comes first.
    static const int values[3] = {1, -1, 0};
    std::vector<int> digit(n, 0);
    while (true) {
        Vec chi(n);
        for (std::size_t i = 0; i < n; ++i) chi[i] = values[digit[i]];
        if (is_character(k.algebra, chi)) return chi;
        std::size_t p = n;
        while (p > 0 && digit[p - 1] == 2) digit[--p] = 0;
        if (p == 0) return std::nullopt;
        ++digit[p - 1];
    }
}

VertexModule vacuum_module(const VertexAlgebra& cv) {
    std::vector<Vec> chars;
    for (std::size_t j = 0; j < cv.num_edges(); ++j) {
        auto t = find_character(*cv.edge(j).algebra);
        if (!t) throw Error(ErrorKind::NoCharacter, "edge factor " + std::to_string(j) + " admits no character");
        chars.push_back(*t);
    }
    const MixedRadix& rad = cv.site_radix();
    std::uint64_t ambient = rad.size();

    SparseVec start;
    {
        std::vector<std::pair<Rational, std::vector<std::size_t>>> acc{{Rational(1), {}}};
        for (std::size_t i = 0; i < cv.num_sites(); ++i) {
            SparseVec l = to_sparse(haar_integral(cv.site_dual(i)).element);
            decltype(acc) next;
            for (const auto& [c, idx] : acc) {
                for (const auto& [b, v] : l) {
                    auto m = idx;
                    m.push_back(b);
                    next.emplace_back(c * v, std::move(m));
                }
            }
            acc = std::move(next);
        }
        SparseAccumulator s;
        for (const auto& [c, idx] : acc) s.add(rad.flat(idx), c);
        start = s.finish();
    }

    auto site_op = [&](std::size_t i, std::size_t f, const SparseVec& x) {
        SparseAccumulator acc;
        for (const auto& [flat, v] : x) {
            std::size_t cur = rad.digit(flat, i);
            for (const auto& [g, w] : cv.site_algebra(i).product(f, cur)) {
                acc.add(flat + (g - cur) * rad.stride(i), v * w);
            }
        }
        return acc.finish();
    };
    auto edge_op = [&](std::size_t j, std::size_t k, const SparseVec& x) {
        SparseAccumulator acc;
        for (const auto& [flat, v] : x) {
            for (const auto& t : cv.straighten(j, k, rad.unflat(flat))) {
                const Rational& c = chars[j][t.k0];
                if (!is_zero(c)) acc.add(rad.flat(t.f), v * t.coeff * c);
            }
        }
        return acc.finish();
    };
    auto for_each_generator = [&](auto&& fn) {
        for (std::size_t i = 0; i < cv.num_sites(); ++i) {
            for (std::size_t f = 0; f < cv.site_algebra(i).dim; ++f) fn(false, i, f);
        }
        for (std::size_t j = 0; j < cv.num_edges(); ++j) {
            for (std::size_t k = 0; k < cv.edge_algebra(j).dim; ++k) fn(true, j, k);
        }
    };

    EchelonBasis basis(static_cast<std::size_t>(ambient));
    std::deque<SparseVec> queue;
    if (basis.insert(start)) queue.push_back(start);
    while (!queue.empty()) {
        SparseVec x = std::move(queue.front());
        queue.pop_front();
        for_each_generator([&](bool edge, std::size_t a, std::size_t b) {
            SparseVec y = edge ? edge_op(a, b, x) : site_op(a, b, x);
            if (basis.insert(y)) queue.push_back(std::move(y));
        });
    }

    VertexModule m;
    m.dim = basis.size();
    m.kind = "vacuum";
    m.site_actions.resize(cv.num_sites());
    m.edge_actions.resize(cv.num_edges());
    for_each_generator([&](bool edge, std::size_t a, std::size_t b) {
        std::vector<SparseVec> cols;
        for (const auto& v : basis.vectors()) {
            cols.push_back(to_sparse(basis.coordinates(edge ? edge_op(a, b, v) : site_op(a, b, v))));
        }
        (edge ? m.edge_actions : m.site_actions)[a].push_back(SparseMatrix::from_columns(m.dim, cols));
    });
    return m;
}

VertexModule regular_module(const VertexAlgebra& cv, std::uint64_t max_dim) {
    std::uint64_t n = cv.dim();
    if (n > max_dim) throw Error(ErrorKind::DimensionGuardExceeded, "regular module of dimension " + std::to_string(n));
    const MixedRadix& srad = cv.site_radix();
    const MixedRadix& erad = cv.edge_radix();
    std::uint64_t ne = cv.edge_dim();
    VertexModule m;
    m.dim = static_cast<std::size_t>(n);
    m.kind = "regular";
    m.site_actions.resize(cv.num_sites());
    m.edge_actions.resize(cv.num_edges());
    for (std::size_t i = 0; i < cv.num_sites(); ++i) {
        for (std::size_t f = 0; f < cv.site_algebra(i).dim; ++f) {
            std::vector<Triplet> t;
            for (std::uint64_t x = 0; x < n; ++x) {
                std::uint64_t fs = x / ne;
                std::size_t cur = srad.digit(fs, i);
                for (const auto& [g, w] : cv.site_algebra(i).product(f, cur)) {
                    t.push_back({static_cast<std::size_t>((fs + (g - cur) * srad.stride(i)) * ne + x % ne),
                                 static_cast<std::size_t>(x), w});
                }
            }
            m.site_actions[i].push_back(SparseMatrix::from_triplets(m.dim, m.dim, t));
        }
    }
    for (std::size_t j = 0; j < cv.num_edges(); ++j) {
        const AlgebraData& kj = cv.edge_algebra(j);
        for (std::size_t k = 0; k < kj.dim; ++k) {
            std::vector<Triplet> t;
            for (std::uint64_t x = 0; x < n; ++x) {
                std::uint64_t ke = x % ne;
                std::size_t cur = erad.digit(ke, j);
                for (const auto& st : cv.straighten(j, k, srad.unflat(x / ne))) {
                    for (const auto& [g, w] : kj.product(st.k0, cur)) {
                        std::uint64_t y = srad.flat(st.f) * ne + ke + (g - cur) * erad.stride(j);
                        t.push_back({static_cast<std::size_t>(y), static_cast<std::size_t>(x), st.coeff * w});
                    }
                }
            }
            m.edge_actions[j].push_back(SparseMatrix::from_triplets(m.dim, m.dim, t));
        }
    }
    return m;
}

VertexModule explicit_module(const VertexAlgebra& cv, std::size_t dim,
                             std::vector<std::vector<SparseMatrix>> site_actions,
                             std::vector<std::vector<SparseMatrix>> edge_actions) {
    VertexModule m{dim, "explicit", std::move(site_actions), std::move(edge_actions)};
    Report r = validate_vertex_module(cv, m);
    if (const Check* c = r.first_failure()) throw Error(ErrorKind::ModuleInvalid, c->name + ": " + c->detail);
    return m;
}

}  // namespace kitaev
