#pragma once

#include "kitaev/crossed.hpp"

#include <optional>

namespace kitaev {

struct VertexSite {
    HopfPtr hopf;               // H_p
    std::size_t right_factor;   // edge factor of e_p
    std::size_t left_factor;    // edge factor of e'_p
    int eps_right = 1;          // eps(e_p)
    int eps_left = 1;           // eps(e'_p)
    std::size_t site_id = 0;
    std::size_t plaquette = 0;
};

struct VertexEdge {
    BicomodulePtr algebra;  // K_e^{eps(e)}, already oriented
    int sign = 1;
    std::size_t half_edge = 0;
};

// C_v = (tensor of the H_p^*) # (tensor of the K_e^{eps(e)}), kept factorized.
// A basis element is a site multi-index F and an edge multi-index K, flattened as F * edge_dim + K.
class VertexAlgebra {
public:
    VertexAlgebra(std::size_t vertex, std::vector<VertexSite> sites, std::vector<VertexEdge> edges);

    struct Term {
        Rational coeff;
        std::vector<std::size_t> f;  // site multi-index
        std::size_t k0;              // basis of the edge factor being moved
    };
    struct SiteTerm {
        Rational coeff;
        SparseVec f;  // element of the one site factor
        std::size_t k0;
    };

    std::size_t vertex() const { return vertex_; }
    std::size_t num_sites() const { return sites_.size(); }
    std::size_t num_edges() const { return edges_.size(); }
    const VertexSite& site(std::size_t i) const { return sites_[i]; }
    const VertexEdge& edge(std::size_t j) const { return edges_[j]; }
    const AlgebraData& site_algebra(std::size_t i) const { return duals_[i].algebra; }
    const HopfAlgebraData& site_dual(std::size_t i) const { return duals_[i]; }
    const AlgebraData& edge_algebra(std::size_t j) const { return edges_[j].algebra->algebra; }
    const MixedRadix& site_radix() const { return site_radix_; }
    const MixedRadix& edge_radix() const { return edge_radix_; }
    std::uint64_t site_dim() const { return site_radix_.size(); }
    std::uint64_t edge_dim() const { return edge_radix_.size(); }
    std::uint64_t dim() const { return site_dim() * edge_dim(); }

    // f(<b>^{-eps'} ? <a>^{eps}) for basis f of H_p^*; legs index H_p or equal dim H_p for the unit.
    const SparseVec& twisted(std::size_t site, std::size_t f, std::size_t b, std::size_t a) const;
    // k . F = sum coeff F' . k0 for basis k of edge factor j.
    std::vector<Term> straighten(std::size_t j, std::size_t k, const std::vector<std::size_t>& f) const;
    // k . f for f in one site factor and the unit elsewhere.
    std::vector<SiteTerm> straighten_site(std::size_t j, std::size_t k, std::size_t site, std::size_t f) const;

    // Structure constants of the whole algebra; refuses beyond max_dim.
    AlgebraData materialize(std::uint64_t max_dim = 4096) const;
    BalancingAlgebra site_balancing(std::size_t i) const;

private:
    std::size_t vertex_;
    std::vector<VertexSite> sites_;
    std::vector<VertexEdge> edges_;
    std::vector<HopfAlgebraData> duals_;
    MixedRadix site_radix_;
    MixedRadix edge_radix_;
    // twisted_[i][(f * (n + 1) + b) * (n + 1) + a]
    std::vector<std::vector<SparseVec>> twisted_;
    // Legs of each edge basis element, cached.
    std::vector<std::vector<std::vector<BicomoduleAlgebraData::Term>>> legs_;
};

using VertexAlgebraPtr = std::shared_ptr<const VertexAlgebra>;

struct VertexModule {
    std::size_t dim = 0;
    std::string kind;
    std::vector<std::vector<SparseMatrix>> site_actions;  // [site][basis of H_p^*]
    std::vector<std::vector<SparseMatrix>> edge_actions;  // [edge factor][basis of K_e]

    SparseMatrix site_action(std::size_t i, const SparseVec& f) const;
    SparseMatrix edge_action(std::size_t j, const SparseVec& k) const;
    // Action of the basis element F * edge_dim + K.
    SparseMatrix basis_action(const VertexAlgebra& cv, std::uint64_t index) const;
};

using VertexModulePtr = std::shared_ptr<const VertexModule>;

// Representations of each factor, commutation of distinct factors, and every straightening relation.
Report validate_vertex_module(const VertexAlgebra& cv, const VertexModule& m);

// An algebra character of K: a Hopf-side counit when it is one, else a small sign search.
std::optional<Vec> find_character(const BicomoduleAlgebraData& k);

// Cyclic submodule of C_v (x)_K k_t generated by the tensor of the Haar integrals of the H_p^*.
VertexModule vacuum_module(const VertexAlgebra& cv);
VertexModule regular_module(const VertexAlgebra& cv, std::uint64_t max_dim = 4096);
VertexModule explicit_module(const VertexAlgebra& cv, std::size_t dim,
                             std::vector<std::vector<SparseMatrix>> site_actions,
                             std::vector<std::vector<SparseMatrix>> edge_actions);

}  // namespace kitaev
