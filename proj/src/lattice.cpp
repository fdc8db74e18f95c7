#include "kitaev/lattice.hpp"

#include "kitaev/error.hpp"
#include "kitaev/separability.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <map>
#include <set>
#include <thread>

namespace kitaev {

std::uint64_t default_max_dim() {
    if (const char* env = std::getenv("KITAEV_MAX_DIM")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return v;
    }
    return std::uint64_t{1} << 20;
}

StateSpace::StateSpace(LabeledSurface labels, std::uint64_t max_dim) : labels_(std::move(labels)) {
    const Surface& sf = surface();
    if (labels_.vertex_labels.size() != sf.num_vertices()) {
        throw Error(ErrorKind::UnlabeledCell, "vertex modules have not been assigned");
    }
    std::vector<std::size_t> dims;
    for (std::size_t e = 0; e < sf.num_edges(); ++e) {
        if (!labels_.edge_labels.at(e)) throw Error(ErrorKind::UnlabeledCell, "edge " + std::to_string(e));
        dims.push_back(labels_.edge_labels[e]->dim());
    }
    slot_.assign(sf.cells().num_half_edges(), 0);
    for (std::size_t v = 0; v < sf.num_vertices(); ++v) {
        const auto& m = labels_.vertex_labels[v];
        if (!m) throw Error(ErrorKind::UnlabeledCell, "vertex " + std::to_string(v));
        algebras_.push_back(kitaev::vertex_algebra(labels_, v));
        const VertexAlgebra& cv = *algebras_.back();
        if (m->site_actions.size() != cv.num_sites() || m->edge_actions.size() != cv.num_edges()) {
            throw Error(ErrorKind::InvalidLabeling, "module at vertex " + std::to_string(v) + " has the wrong shape");
        }
        dims.push_back(m->dim);
        auto order = sf.clockwise_from_anchor(v);
        for (std::size_t j = 0; j < order.size(); ++j) slot_[order[j]] = j;
    }
    std::uint64_t total = 1;
    for (auto d : dims) {
        if (d != 0 && total > max_dim / d) {
            throw Error(ErrorKind::DimensionGuardExceeded,
                        "state space exceeds the limit of " + std::to_string(max_dim));
        }
        total *= d;
    }
    if (total > max_dim) {
        throw Error(ErrorKind::DimensionGuardExceeded, "state space exceeds the limit of " + std::to_string(max_dim));
    }
    radix_ = MixedRadix(std::move(dims));
    for (std::size_t p = 0; p < sf.num_faces(); ++p) {
        if (!labels_.plaquette_labels.at(p)) throw Error(ErrorKind::UnlabeledCell, "face " + std::to_string(p));
        duals_.push_back(dual_hopf(*labels_.plaquette_labels[p]));
    }
}

std::string StateSpace::factor_name(std::size_t f) const {
    std::size_t ne = surface().num_edges();
    return f < ne ? "edge " + std::to_string(f) : "vertex " + std::to_string(f - ne);
}

namespace {

MixedRadix local_radix(const StateSpace& s, const std::vector<std::size_t>& support) {
    std::vector<std::size_t> dims;
    for (auto f : support) dims.push_back(s.factor_dim(f));
    return MixedRadix(std::move(dims));
}

std::vector<std::size_t> merged(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
    std::vector<std::size_t> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

// Offset inside the radix of `outer` of each basis index of the radix of `inner`.
std::vector<std::uint64_t> embed_offsets(const StateSpace& s, const std::vector<std::size_t>& inner,
                                         const std::vector<std::size_t>& outer) {
    MixedRadix in = local_radix(s, inner), out = local_radix(s, outer);
    std::vector<std::uint64_t> stride;
    for (auto f : inner) {
        auto it = std::lower_bound(outer.begin(), outer.end(), f);
        if (it == outer.end() || *it != f) throw Error(ErrorKind::DimensionMismatch, "support is not contained");
        stride.push_back(out.stride(static_cast<std::size_t>(it - outer.begin())));
    }
    std::vector<std::uint64_t> offsets(in.size(), 0);
    for (std::uint64_t l = 0; l < in.size(); ++l) {
        for (std::size_t i = 0; i < inner.size(); ++i) offsets[l] += in.digit(l, i) * stride[i];
    }
    return offsets;
}

SparseVec basis(std::size_t i) { return SparseVec{{i, Rational(1)}}; }

LocalOperator single(std::size_t factor, SparseMatrix m) { return LocalOperator{{factor}, std::move(m)}; }

}  // namespace

LocalOperator local_identity(const StateSpace& s, std::vector<std::size_t> support) {
    std::sort(support.begin(), support.end());
    support.erase(std::unique(support.begin(), support.end()), support.end());
    auto n = local_radix(s, support).size();
    return LocalOperator{std::move(support), SparseMatrix::identity(n)};
}

namespace {

std::vector<std::size_t> all_factors(const StateSpace& s) {
    std::vector<std::size_t> all(s.num_factors());
    for (std::size_t f = 0; f < all.size(); ++f) all[f] = f;
    return all;
}

// Columns of sum_i c_i (product of ops_i, rightmost applied first) on the union of the supports.
struct Product {
    Rational coeff;
    std::vector<const LocalOperator*> factors;  // leftmost first
};

struct PreparedProduct {
    Rational coeff;
    std::vector<PreparedOperator> factors;
};

std::vector<std::size_t> support_of(const std::vector<Product>& terms) {
    std::vector<std::size_t> u;
    for (const auto& t : terms) {
        for (const auto* op : t.factors) u = merged(u, op->support);
    }
    return u;
}

std::vector<PreparedProduct> prepare(const StateSpace& s, const std::vector<Product>& terms,
                                     const std::vector<std::size_t>& u) {
    std::vector<PreparedProduct> out;
    for (const auto& t : terms) {
        PreparedProduct p{t.coeff, {}};
        for (const auto* op : t.factors) p.factors.emplace_back(s, *op, u);
        out.push_back(std::move(p));
    }
    return out;
}

SparseVec apply_sum(const std::vector<PreparedProduct>& terms, std::uint64_t x) {
    SparseVec out;
    for (const auto& t : terms) {
        SparseVec y{{x, t.coeff}};
        for (auto it = t.factors.rbegin(); it != t.factors.rend() && !y.empty(); ++it) y = it->apply(y);
        if (terms.size() == 1) return y;
        axpy(out, Rational(1), y);
    }
    return out;
}

LocalOperator materialize_sum(const StateSpace& s, const std::vector<Product>& terms,
                              std::vector<std::size_t> u = {}) {
    u = merged(u, support_of(terms));
    auto prepared = prepare(s, terms, u);
    std::uint64_t n = local_radix(s, u).size();
    std::vector<SparseVec> cols(n);
    for (std::uint64_t x = 0; x < n; ++x) cols[x] = apply_sum(prepared, x);
    return LocalOperator{u, SparseMatrix::from_columns(n, cols)};
}

bool sums_equal(const StateSpace& s, const std::vector<Product>& lhs, const std::vector<Product>& rhs) {
    auto u = merged(support_of(lhs), support_of(rhs));
    auto pl = prepare(s, lhs, u), pr = prepare(s, rhs, u);
    std::uint64_t n = local_radix(s, u).size();
    for (std::uint64_t x = 0; x < n; ++x) {
        if (apply_sum(pl, x) != apply_sum(pr, x)) return false;
    }
    return true;
}

}  // namespace

LocalOperator extend(const StateSpace& s, const LocalOperator& op, const std::vector<std::size_t>& support) {
    if (op.support == support) return op;
    return materialize_sum(s, {{Rational(1), {&op}}}, support);
}

LocalOperator compose(const StateSpace& s, const LocalOperator& a, const LocalOperator& b) {
    return materialize_sum(s, {{Rational(1), {&a, &b}}});
}

LocalOperator combine(const StateSpace& s, const Rational& ca, const LocalOperator& a, const Rational& cb,
                      const LocalOperator& b) {
    return materialize_sum(s, {{ca, {&a}}, {cb, {&b}}});
}

bool same_operator(const StateSpace& s, const LocalOperator& a, const LocalOperator& b) {
    return sums_equal(s, {{Rational(1), {&a}}}, {{Rational(1), {&b}}});
}

namespace {

// Basis of the span of the slices of op over the shared factors: op = sum_{r,r'} slice_{r,r'} (x) E_{r,r'}.
std::vector<SparseMatrix> slice_basis(const StateSpace& s, const LocalOperator& op,
                                      const std::vector<std::size_t>& shared) {
    std::vector<std::size_t> rest;
    std::set_difference(op.support.begin(), op.support.end(), shared.begin(), shared.end(),
                        std::back_inserter(rest));
    MixedRadix rs = local_radix(s, rest);
    std::uint64_t dt = local_radix(s, shared).size(), dr = rs.size();
    // Invert the embeddings to split a local index into (shared, rest).
    auto ts = embed_offsets(s, shared, op.support);
    auto rr = embed_offsets(s, rest, op.support);
    std::uint64_t n = op.matrix.rows();
    std::vector<std::uint64_t> t_of(n), r_of(n);
    for (std::uint64_t t = 0; t < ts.size(); ++t) {
        for (std::uint64_t r = 0; r < rr.size(); ++r) {
            t_of[ts[t] + rr[r]] = t;
            r_of[ts[t] + rr[r]] = r;
        }
    }
    std::map<std::uint64_t, SparseVec> slices;
    for (std::uint64_t i = 0; i < n; ++i) {
        for (const auto& [j, v] : op.matrix.row(i)) {
            slices[r_of[i] * dr + r_of[j]].emplace_back(t_of[i] * dt + t_of[j], v);
        }
    }
    std::set<SparseVec> distinct;
    for (auto& [key, vec] : slices) {
        std::sort(vec.begin(), vec.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
        distinct.insert(std::move(vec));
    }
    EchelonBasis span(dt * dt);
    for (const auto& v : distinct) {
        span.insert(v);
        if (span.size() == dt * dt) break;
    }
    std::vector<SparseMatrix> out;
    for (const auto& v : span.vectors()) {
        std::vector<Triplet> tr;
        for (const auto& [f, x] : v) tr.push_back({f / dt, f % dt, x});
        out.push_back(SparseMatrix::from_triplets(dt, dt, tr));
    }
    return out;
}

}  // namespace

bool operators_commute(const StateSpace& s, const LocalOperator& a, const LocalOperator& b) {
    std::vector<std::size_t> shared;
    std::set_intersection(a.support.begin(), a.support.end(), b.support.begin(), b.support.end(),
                          std::back_inserter(shared));
    if (shared.empty()) return true;
    // Rest parts of a and b live on disjoint factors, so the commutator vanishes exactly
    // when every pair of slice basis elements commutes.
    auto sa = slice_basis(s, a, shared);
    auto sb = slice_basis(s, b, shared);
    for (const auto& x : sa) {
        for (const auto& y : sb) {
            if (x * y != y * x) return false;
        }
    }
    return true;
}

SparseMatrix to_global(const StateSpace& s, const LocalOperator& op, std::uint64_t max_dim) {
    if (s.dim() > max_dim) {
        throw Error(ErrorKind::DimensionGuardExceeded, "global matrix of dimension " + std::to_string(s.dim()));
    }
    return extend(s, op, all_factors(s)).matrix;
}

PreparedOperator::PreparedOperator(const StateSpace& s, const LocalOperator& op, bool transpose)
    : PreparedOperator(s, op, all_factors(s), transpose) {}

PreparedOperator::PreparedOperator(const StateSpace& s, const LocalOperator& op,
                                   const std::vector<std::size_t>& within, bool transpose) {
    MixedRadix wr = local_radix(s, within);
    for (auto f : op.support) {
        auto it = std::lower_bound(within.begin(), within.end(), f);
        if (it == within.end() || *it != f) throw Error(ErrorKind::DimensionMismatch, "support is not contained");
        stride_.push_back(wr.stride(static_cast<std::size_t>(it - within.begin())));
        dims_.push_back(s.factor_dim(f));
    }
    offset_ = embed_offsets(s, op.support, within);
    if (transpose) {
        columns_.resize(op.matrix.rows());
        for (std::size_t i = 0; i < op.matrix.rows(); ++i) columns_[i] = op.matrix.row(i);
    } else {
        columns_ = op.matrix.columns();
    }
}

SparseVec PreparedOperator::apply(const SparseVec& x) const {
    std::vector<std::pair<std::size_t, Rational>> raw;
    for (const auto& [g, v] : x) {
        std::uint64_t l = 0;
        for (std::size_t i = 0; i < dims_.size(); ++i) l = l * dims_[i] + (g / stride_[i]) % dims_[i];
        std::uint64_t rest = g - offset_[l];
        for (const auto& [k, w] : columns_[l]) raw.emplace_back(rest + offset_[k], v * w);
    }
    std::sort(raw.begin(), raw.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    SparseVec out;
    for (auto& [i, v] : raw) {
        if (!out.empty() && out.back().first == i) {
            out.back().second += v;
        } else {
            if (!out.empty() && is_zero(out.back().second)) out.pop_back();
            out.emplace_back(i, std::move(v));
        }
    }
    if (!out.empty() && is_zero(out.back().second)) out.pop_back();
    return out;
}

LocalOperator vertex_left_action(const StateSpace& s, std::size_t h, const SparseVec& x) {
    std::size_t v = s.surface().cells().vertex_of(h);
    return single(s.vertex_factor(v), s.vertex_module(v).edge_action(s.edge_slot(h), x));
}

LocalOperator vertex_right_action(const StateSpace& s, std::size_t h, const SparseVec& y) {
    std::size_t v = s.surface().cells().vertex_of(h);
    const AlgebraData& a = s.vertex_algebra(v).edge_algebra(s.edge_slot(h));
    // (y . phi)(k) = phi(y k): column a holds the coefficient of b_a in y b_c at row c.
    std::vector<Triplet> tr;
    for (const auto& [i, yi] : y) {
        for (std::size_t c = 0; c < a.dim; ++c) {
            for (const auto& [m, w] : a.product(i, c)) tr.push_back({c, m, yi * w});
        }
    }
    return single(s.edge_factor(edge_of(h)), SparseMatrix::from_triplets(a.dim, a.dim, tr));
}

LocalOperator plaquette_left_action(const StateSpace& s, std::size_t site_id, const SparseVec& f) {
    std::size_t v = s.surface().site(site_id).vertex;
    return single(s.vertex_factor(v), s.vertex_module(v).site_action(s.site_slot(site_id), f));
}

namespace {

struct BoundaryItem {
    std::size_t factor;
    std::vector<std::vector<SparseVec>> act;  // [basis of H_p^*][digit] -> column
};

std::size_t walk_position(const PlaquetteWalk& w, std::size_t site_id) {
    for (std::size_t i = 0; i < w.boundary.size(); ++i) {
        if (w.boundary[i].site == site_id) return i;
    }
    throw Error(ErrorKind::NotASite, "site " + std::to_string(site_id) + " is not on its face walk");
}

BoundaryItem edge_item(const StateSpace& s, std::size_t p, const WalkStep& step, const OperatorOptions& opt) {
    const HopfAlgebraData& hp = *s.labels().plaquette_labels[p];
    const BicomoduleAlgebraData& k = *s.labels().edge_labels[step.edge];
    std::size_t nd = hp.dim();
    int power = opt.flip_plaquette_sign ? -step.sign : step.sign;
    std::vector<SparseVec> pw(nd);
    for (std::size_t i = 0; i < nd; ++i) pw[i] = hp.signed_power(basis(i), power);
    // (delta^a . g)(b_c) = sum over the coaction of b_c with middle leg a of g(<leg on p's side>^power).
    std::vector<std::vector<SparseAccumulator>> acc(nd, std::vector<SparseAccumulator>(k.dim()));
    for (std::size_t c = 0; c < k.dim(); ++c) {
        for (const auto& t : k.terms(c)) {
            std::size_t leg = step.sign > 0 ? t.right : t.left;
            for (const auto& [m, w] : pw[leg]) acc[m][t.middle].add(c, t.coeff * w);
        }
    }
    BoundaryItem item{s.edge_factor(step.edge), {}};
    item.act.resize(nd);
    for (std::size_t m = 0; m < nd; ++m) {
        for (auto& a : acc[m]) item.act[m].push_back(a.finish());
    }
    return item;
}

BoundaryItem site_item(const StateSpace& s, std::size_t p, std::size_t site_id) {
    std::size_t v = s.surface().site(site_id).vertex;
    const HopfAlgebraData& dual = s.plaquette_dual(p);
    // z . g = S(g) . z
    BoundaryItem item{s.vertex_factor(v), {}};
    for (std::size_t m = 0; m < dual.dim(); ++m) {
        SparseVec sg = dual.apply_antipode(basis(m));
        item.act.push_back(s.vertex_module(v).site_action(s.site_slot(site_id), sg).columns());
    }
    return item;
}

}  // namespace

LocalOperator plaquette_right_action(const StateSpace& s, std::size_t site_id, const SparseVec& f,
                                     const OperatorOptions& opt) {
    const Surface& sf = s.surface();
    std::size_t p = sf.site(site_id).plaquette;
    const PlaquetteWalk& walk = sf.face(p);
    const HopfAlgebraData& dual = s.plaquette_dual(p);
    std::size_t n = walk.boundary.size(), nd = dual.dim();
    std::size_t k = walk_position(walk, site_id);

    // e_k, site k+1, e_{k+1}, ..., site k-1, e_{k-1}
    std::vector<BoundaryItem> items;
    for (std::size_t t = 0; t < n; ++t) {
        items.push_back(edge_item(s, p, walk.boundary[(k + t) % n], opt));
        if (t + 1 < n) items.push_back(site_item(s, p, walk.boundary[(k + t + 1) % n].site));
    }
    std::vector<std::size_t> support;
    for (const auto& it : items) support.push_back(it.factor);
    std::sort(support.begin(), support.end());
    support.erase(std::unique(support.begin(), support.end()), support.end());
    MixedRadix lr = local_radix(s, support);
    std::vector<std::size_t> pos;
    for (const auto& it : items) {
        pos.push_back(static_cast<std::size_t>(std::lower_bound(support.begin(), support.end(), it.factor) -
                                               support.begin()));
    }

    // Carry the unused part of the coproduct along the boundary.
    std::vector<SparseVec> columns(lr.size());
    for (std::uint64_t x = 0; x < lr.size(); ++x) {
        std::map<std::pair<std::uint64_t, std::size_t>, Rational> states;
        for (const auto& [m, c] : f) states[{x, m}] = c;
        for (std::size_t i = 0; i + 1 < items.size(); ++i) {
            std::map<std::pair<std::uint64_t, std::size_t>, Rational> next;
            std::uint64_t stride = lr.stride(pos[i]);
            for (const auto& [key, c] : states) {
                auto [idx, m] = key;
                std::size_t d = lr.digit(idx, pos[i]);
                for (const auto& [fl, w] : dual.comult[m]) {
                    for (const auto& [d2, u] : items[i].act[fl / nd][d]) {
                        std::uint64_t moved = idx + (d2 - d) * stride;
                        auto [it, fresh] = next.try_emplace({moved, fl % nd}, c * w * u);
                        if (!fresh) it->second += c * w * u;
                    }
                }
            }
            states.clear();
            for (auto& [key, c] : next) {
                if (!is_zero(c)) states.emplace(key, std::move(c));
            }
        }
        SparseAccumulator out;
        const auto& last = items.back();
        std::uint64_t stride = lr.stride(pos.back());
        for (const auto& [key, c] : states) {
            auto [idx, m] = key;
            std::size_t d = lr.digit(idx, pos.back());
            for (const auto& [d2, u] : last.act[m][d]) out.add(idx + (d2 - d) * stride, c * u);
        }
        columns[x] = out.finish();
    }
    return LocalOperator{support, SparseMatrix::from_columns(lr.size(), columns)};
}

LocalOperator vertex_operator(const StateSpace& s, std::size_t v) {
    const VertexAlgebra& cv = s.vertex_algebra(v);
    LocalOperator out = local_identity(s, {s.vertex_factor(v)});
    for (std::size_t j = 0; j < cv.num_edges(); ++j) {
        const AlgebraData& a = cv.edge_algebra(j);
        std::size_t h = cv.edge(j).half_edge;
        auto p = symmetric_separability_idempotent(a);
        std::optional<LocalOperator> factor;
        for (const auto& [f, c] : p.element) {
            LocalOperator term = compose(s, vertex_left_action(s, h, basis(f / a.dim)),
                                         vertex_right_action(s, h, basis(f % a.dim)));
            factor = factor ? combine(s, Rational(1), *factor, c, term)
                            : LocalOperator{term.support, term.matrix.scaled(c)};
        }
        out = compose(s, out, *factor);
    }
    return out;
}

LocalOperator plaquette_operator(const StateSpace& s, std::size_t site_id, const OperatorOptions& opt) {
    std::size_t p = s.surface().site(site_id).plaquette;
    const HopfAlgebraData& dual = s.plaquette_dual(p);
    std::size_t nd = dual.dim();
    SparseVec lambda = to_sparse(haar_integral(dual).element);
    // B_p = sum L(lambda_1) R(S(lambda_2)), grouped by the first leg.
    std::map<std::size_t, SparseAccumulator> legs;
    for (const auto& [f, c] : dual.coproduct(lambda)) legs[f / nd].add(dual.apply_antipode(basis(f % nd)), c);
    std::optional<LocalOperator> out;
    for (auto& [m, acc] : legs) {
        SparseVec g = acc.finish();
        if (g.empty()) continue;
        LocalOperator term =
            compose(s, plaquette_left_action(s, site_id, basis(m)), plaquette_right_action(s, site_id, g, opt));
        out = out ? combine(s, Rational(1), *out, Rational(1), term) : term;
    }
    if (!out) throw Error(ErrorKind::NoHaarIntegral, "plaquette operator vanishes");
    return *out;
}

OperatorSet build_operators(const StateSpace& s, const OperatorOptions& opt) {
    OperatorSet ops;
    const Surface& sf = s.surface();
    for (std::size_t v = 0; v < sf.num_vertices(); ++v) ops.vertex.push_back(vertex_operator(s, v));
    for (std::size_t p = 0; p < sf.num_faces(); ++p) {
        if (sf.is_external(p)) continue;
        ops.plaquettes.push_back(p);
        ops.plaquette.push_back(plaquette_operator(s, sf.face(p).boundary.front().site, opt));
    }
    return ops;
}

namespace {

void record(Report& r, const std::string& name, const std::string& failed) {
    r.add(name, failed.empty(), failed.empty() ? "" : "fails at" + failed);
}

}  // namespace

Report check_idempotence(const StateSpace& s, const OperatorSet& ops) {
    Report r;
    std::string bad;
    for (std::size_t v = 0; v < ops.vertex.size(); ++v) {
        if (!same_operator(s, compose(s, ops.vertex[v], ops.vertex[v]), ops.vertex[v])) bad += " A_" + std::to_string(v);
    }
    record(r, "vertex operators are idempotent", bad);
    bad.clear();
    for (std::size_t i = 0; i < ops.plaquette.size(); ++i) {
        if (!same_operator(s, compose(s, ops.plaquette[i], ops.plaquette[i]), ops.plaquette[i])) {
            bad += " B_" + std::to_string(ops.plaquettes[i]);
        }
    }
    record(r, "plaquette operators are idempotent", bad);
    return r;
}

Report check_commutation(const StateSpace& s, const OperatorSet& ops) {
    Report r;
    Report reg = regularity_check(s.surface());
    if (!reg.ok()) {
        r.warn("surface is not regular (" + reg.first_failure()->name + "); commutation checks skipped");
        return r;
    }
    std::string bad;
    for (std::size_t v = 0; v < ops.vertex.size(); ++v) {
        for (std::size_t w = v + 1; w < ops.vertex.size(); ++w) {
            if (!operators_commute(s, ops.vertex[v], ops.vertex[w])) {
                bad += " (A_" + std::to_string(v) + ",A_" + std::to_string(w) + ")";
            }
        }
    }
    record(r, "vertex operators commute", bad);
    bad.clear();
    for (std::size_t i = 0; i < ops.plaquette.size(); ++i) {
        for (std::size_t j = i + 1; j < ops.plaquette.size(); ++j) {
            if (!operators_commute(s, ops.plaquette[i], ops.plaquette[j])) {
                bad += " (B_" + std::to_string(ops.plaquettes[i]) + ",B_" + std::to_string(ops.plaquettes[j]) + ")";
            }
        }
    }
    record(r, "plaquette operators commute", bad);
    bad.clear();
    for (std::size_t v = 0; v < ops.vertex.size(); ++v) {
        for (std::size_t i = 0; i < ops.plaquette.size(); ++i) {
            if (!operators_commute(s, ops.vertex[v], ops.plaquette[i])) {
                bad += " (A_" + std::to_string(v) + ",B_" + std::to_string(ops.plaquettes[i]) + ")";
            }
        }
    }
    record(r, "vertex and plaquette operators commute", bad);
    return r;
}

Report check_site_independence(const StateSpace& s, const OperatorOptions& opt) {
    Report r;
    const Surface& sf = s.surface();
    std::string bad;
    for (std::size_t p = 0; p < sf.num_faces(); ++p) {
        if (sf.is_external(p)) continue;
        const auto& steps = sf.face(p).boundary;
        LocalOperator first = plaquette_operator(s, steps.front().site, opt);
        for (std::size_t i = 1; i < steps.size(); ++i) {
            if (!same_operator(s, first, plaquette_operator(s, steps[i].site, opt))) {
                bad += " B_" + std::to_string(p) + "@" + std::to_string(steps[i].site);
                break;
            }
        }
    }
    record(r, "plaquette operator does not depend on the site", bad);
    return r;
}

Report check_straightening_representation(const StateSpace& s, const OperatorOptions& opt) {
    Report r;
    const Surface& sf = s.surface();
    std::string bad_left, bad_right;
    std::size_t skipped = 0;
    for (std::size_t p = 0; p < sf.num_faces(); ++p) {
        if (sf.is_external(p)) continue;
        std::size_t nd = s.plaquette_dual(p).dim();
        std::vector<std::size_t> meets(sf.num_edges(), 0);
        for (const auto& step : sf.face(p).boundary) ++meets[step.edge];
        for (const auto& step : sf.face(p).boundary) {
            std::size_t id = step.site;
            const SiteData& sd = sf.site(id);
            const VertexAlgebra& cv = s.vertex_algebra(sd.vertex);
            std::size_t i = s.site_slot(id);
            std::map<SparseVec, LocalOperator> lf, rf;
            auto left_f = [&](const SparseVec& f) -> const LocalOperator& {
                auto it = lf.find(f);
                if (it == lf.end()) it = lf.emplace(f, plaquette_left_action(s, id, f)).first;
                return it->second;
            };
            auto right_f = [&](const SparseVec& f) -> const LocalOperator& {
                auto it = rf.find(f);
                if (it == rf.end()) it = rf.emplace(f, plaquette_right_action(s, id, f, opt)).first;
                return it->second;
            };
            for (std::size_t j = 0; j < cv.num_edges(); ++j) {
                std::size_t h = cv.edge(j).half_edge;
                bool adjacent = h == sd.left_half_edge || h == sd.right_half_edge;
                bool check_right = meets[edge_of(h)] == (adjacent ? 1u : 0u);
                std::size_t nk = cv.edge_algebra(j).dim;
                std::vector<LocalOperator> lk, rk;
                for (std::size_t k = 0; k < nk; ++k) {
                    lk.push_back(vertex_left_action(s, h, basis(k)));
                    rk.push_back(vertex_right_action(s, h, basis(k)));
                }
                for (std::size_t m = 0; m < nd; ++m) {
                    for (std::size_t k = 0; k < nk; ++k) {
                        // k f = sum f' k0, grouped by k0.
                        std::map<std::size_t, SparseAccumulator> by_k0;
                        for (const auto& t : cv.straighten_site(j, k, i, m)) by_k0[t.k0].add(t.f, t.coeff);
                        std::vector<Product> left, right;
                        for (auto& [k0, acc] : by_k0) {
                            SparseVec f2 = acc.finish();
                            if (f2.empty()) continue;
                            left.push_back({Rational(1), {&left_f(f2), &lk[k0]}});
                            if (check_right) right.push_back({Rational(1), {&rk[k0], &right_f(f2)}});
                        }
                        std::string where = " site " + std::to_string(id) + " f" + std::to_string(m) + " k" +
                                            std::to_string(k) + "@" + std::to_string(h);
                        const LocalOperator& fm = left_f(basis(m));
                        if (bad_left.empty() && !sums_equal(s, {{Rational(1), {&lk[k], &fm}}}, left)) {
                            bad_left = where;
                        }
                        if (!check_right) {
                            ++skipped;
                            continue;
                        }
                        const LocalOperator& gm = right_f(basis(m));
                        if (bad_right.empty() && !sums_equal(s, {{Rational(1), {&gm, &rk[k]}}}, right)) {
                            bad_right = where;
                        }
                    }
                }
            }
        }
    }
    record(r, "left straightening is represented", bad_left);
    record(r, "right straightening is represented", bad_right);
    if (skipped) {
        r.warn(std::to_string(skipped) +
               " right relations skipped: their edge meets the face away from the site or twice");
    }
    return r;
}

Report check_lattice(const StateSpace& s, const OperatorSet& ops, const OperatorOptions& opt) {
    Report r;
    r.merge(check_idempotence(s, ops));
    r.merge(check_commutation(s, ops));
    r.merge(check_site_independence(s, opt));
    r.merge(check_straightening_representation(s, opt));
    r.merge(check_locality(s, ops));
    return r;
}

Report check_locality(const StateSpace& s, const OperatorSet& ops) {
    Report r;
    const Surface& sf = s.surface();
    auto within = [](const std::vector<std::size_t>& support, std::vector<std::size_t> allowed) {
        std::sort(allowed.begin(), allowed.end());
        return std::includes(allowed.begin(), allowed.end(), support.begin(), support.end());
    };
    std::string bad;
    for (std::size_t v = 0; v < ops.vertex.size(); ++v) {
        std::vector<std::size_t> allowed{s.vertex_factor(v)};
        for (std::size_t h : sf.clockwise_from_anchor(v)) allowed.push_back(s.edge_factor(edge_of(h)));
        if (!within(ops.vertex[v].support, allowed)) bad += " A_" + std::to_string(v);
    }
    record(r, "vertex operators act on incident cells only", bad);
    bad.clear();
    for (std::size_t i = 0; i < ops.plaquette.size(); ++i) {
        std::vector<std::size_t> allowed;
        for (const auto& step : sf.face(ops.plaquettes[i]).boundary) {
            allowed.push_back(s.edge_factor(step.edge));
            allowed.push_back(s.vertex_factor(sf.site(step.site).vertex));
        }
        if (!within(ops.plaquette[i].support, allowed)) bad += " B_" + std::to_string(ops.plaquettes[i]);
    }
    record(r, "plaquette operators act on incident cells only", bad);
    return r;
}

SparseMatrix hamiltonian(const StateSpace& s, const OperatorSet& ops, std::uint64_t max_dim) {
    if (s.dim() > max_dim) {
        throw Error(ErrorKind::DimensionGuardExceeded, "hamiltonian of dimension " + std::to_string(s.dim()));
    }
    std::size_t n = s.dim();
    SparseMatrix h = SparseMatrix::identity(n).scaled(Rational(static_cast<long>(ops.vertex.size() + ops.plaquette.size())));
    for (const auto& a : ops.vertex) h = h - to_global(s, a, max_dim);
    for (const auto& b : ops.plaquette) h = h - to_global(s, b, max_dim);
    return h;
}

namespace {

Rational streamed_trace(const StateSpace& s, const OperatorSet& ops) {
    // P = A_0 ... A_{n-1} B_0 ... B_{m-1}; tr P = sum_x <P_0^T ... e_x, ... P_{N-1} e_x>.
    std::vector<const LocalOperator*> all;
    for (const auto& op : ops.vertex) all.push_back(&op);
    for (const auto& op : ops.plaquette) all.push_back(&op);
    std::vector<PreparedOperator> fwd, bwd;
    for (const auto* op : all) {
        fwd.emplace_back(s, *op, false);
        bwd.emplace_back(s, *op, true);
    }
    std::uint64_t n = s.dim();
    unsigned workers = std::max(1u, std::min(std::thread::hardware_concurrency(), 16u));
    std::atomic<std::uint64_t> next{0};
    constexpr std::uint64_t chunk = 256;
    std::vector<Rational> partial(workers, Rational(0));
    auto work = [&](unsigned id) {
        Rational sum = 0;
        for (;;) {
            std::uint64_t lo = next.fetch_add(chunk);
            if (lo >= n) break;
            std::uint64_t hi = std::min(n, lo + chunk);
            for (std::uint64_t x = lo; x < hi; ++x) {
                SparseVec l{{x, Rational(1)}}, r{{x, Rational(1)}};
                std::size_t i = 0, j = all.size();
                while (i < j && !l.empty() && !r.empty()) {
                    if (l.size() <= r.size()) {
                        l = bwd[i++].apply(l);
                    } else {
                        r = fwd[--j].apply(r);
                    }
                }
                auto ir = r.begin();
                for (const auto& [k, v] : l) {
                    while (ir != r.end() && ir->first < k) ++ir;
                    if (ir != r.end() && ir->first == k) sum += v * ir->second;
                }
            }
        }
        partial[id] = sum;
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < workers; ++i) pool.emplace_back(work, i);
        for (auto& t : pool) t.join();
    }
    Rational total = 0;
    for (const auto& p : partial) total += p;
    return total;
}

}  // namespace

GroundDimension ground_space_dimension(const StateSpace& s, const OperatorSet& ops, GroundMethod method,
                                       std::uint64_t kernel_max) {
    GroundDimension g;
    if (method != GroundMethod::Kernel) {
        Rational t = streamed_trace(s, ops);
        g.trace = t;
        if (t.get_den() != 1 || t < 0) {
            throw Error(ErrorKind::NonIntegerTrace, "tr(prod A prod B) = " + t.get_str());
        }
        g.dimension = t.get_num().get_ui();
    }
    if (method != GroundMethod::Trace) {
        g.kernel = kernel_dimension(hamiltonian(s, ops, kernel_max));
        if (g.trace && *g.kernel != g.dimension) {
            throw Error(ErrorKind::Mismatch, "trace gives " + std::to_string(g.dimension) + ", kernel gives " +
                                                 std::to_string(*g.kernel));
        }
        g.dimension = *g.kernel;
    }
    return g;
}

}  // namespace kitaev
