#pragma once

#include "kitaev/labeling.hpp"

#include <optional>

namespace kitaev {

// KITAEV_MAX_DIM when set, else 2^20.
std::uint64_t default_max_dim();

// H = (tensor over edges of K_e^*) (x) (tensor over vertices of Z_v).
// Factor e is the edge e; factor num_edges + v is the vertex module at v.
class StateSpace {
public:
    explicit StateSpace(LabeledSurface labels, std::uint64_t max_dim = default_max_dim());

    const LabeledSurface& labels() const { return labels_; }
    const Surface& surface() const { return *labels_.surface; }
    std::size_t num_factors() const { return radix_.factors(); }
    std::size_t edge_factor(std::size_t e) const { return e; }
    std::size_t vertex_factor(std::size_t v) const { return surface().num_edges() + v; }
    std::size_t factor_dim(std::size_t f) const { return radix_.dims()[f]; }
    std::string factor_name(std::size_t f) const;
    const MixedRadix& radix() const { return radix_; }
    std::uint64_t dim() const { return radix_.size(); }

    const VertexAlgebra& vertex_algebra(std::size_t v) const { return *algebras_[v]; }
    const VertexModule& vertex_module(std::size_t v) const { return *labels_.vertex_labels[v]; }
    // Position of a site among the site factors of its vertex algebra.
    std::size_t site_slot(std::size_t site_id) const { return slot_[site_id]; }
    // Position of a half-edge among the edge factors of the vertex algebra at its vertex.
    std::size_t edge_slot(std::size_t h) const { return slot_[h]; }
    const HopfAlgebraData& plaquette_dual(std::size_t p) const { return duals_[p]; }

private:
    LabeledSurface labels_;
    MixedRadix radix_;
    std::vector<VertexAlgebraPtr> algebras_;
    std::vector<std::size_t> slot_;
    std::vector<HopfAlgebraData> duals_;
};

// An operator acting as `matrix` on the listed factors (ascending) and as the identity elsewhere.
// The local basis is mixed radix over the support, first factor most significant.
struct LocalOperator {
    std::vector<std::size_t> support;
    SparseMatrix matrix;
};

LocalOperator local_identity(const StateSpace& s, std::vector<std::size_t> support);
LocalOperator extend(const StateSpace& s, const LocalOperator& op, const std::vector<std::size_t>& support);
// a after b.
LocalOperator compose(const StateSpace& s, const LocalOperator& a, const LocalOperator& b);
LocalOperator combine(const StateSpace& s, const Rational& ca, const LocalOperator& a, const Rational& cb,
                      const LocalOperator& b);
bool same_operator(const StateSpace& s, const LocalOperator& a, const LocalOperator& b);
// Exact commutation test through operator-Schmidt slices on the shared factors.
bool operators_commute(const StateSpace& s, const LocalOperator& a, const LocalOperator& b);
SparseMatrix to_global(const StateSpace& s, const LocalOperator& op, std::uint64_t max_dim = 4096);

// Applies a local operator to vectors of the full space, or of the tensor product of the
// factors in `within` when given.
class PreparedOperator {
public:
    PreparedOperator(const StateSpace& s, const LocalOperator& op, bool transpose = false);
    PreparedOperator(const StateSpace& s, const LocalOperator& op, const std::vector<std::size_t>& within,
                     bool transpose = false);
    SparseVec apply(const SparseVec& x) const;
    std::size_t support_size() const { return dims_.size(); }

private:
    std::vector<std::uint64_t> stride_;
    std::vector<std::size_t> dims_;
    std::vector<std::uint64_t> offset_;  // offset of each local basis index in the enclosing space
    std::vector<SparseVec> columns_;
};

struct OperatorOptions {
    // Negative control: uses <x>^{-eps_p} instead of <x>^{eps_p} along the plaquette boundary.
    bool flip_plaquette_sign = false;
};

// Vertex side: x in the edge factor at half-edge h acts on Z_v, y acts on K_e^* by
// multiplication of the oriented algebra.
LocalOperator vertex_left_action(const StateSpace& s, std::size_t h, const SparseVec& x);
LocalOperator vertex_right_action(const StateSpace& s, std::size_t h, const SparseVec& y);
// Plaquette side of the site (p, v): f in H_p^* acts on Z_v on the left, and on the rest of
// the boundary on the right through the iterated coproduct in clockwise order after the site.
LocalOperator plaquette_left_action(const StateSpace& s, std::size_t site_id, const SparseVec& f);
LocalOperator plaquette_right_action(const StateSpace& s, std::size_t site_id, const SparseVec& f,
                                     const OperatorOptions& opt = {});

LocalOperator vertex_operator(const StateSpace& s, std::size_t v);
LocalOperator plaquette_operator(const StateSpace& s, std::size_t site_id, const OperatorOptions& opt = {});

struct OperatorSet {
    std::vector<LocalOperator> vertex;     // A_v for every vertex
    std::vector<std::size_t> plaquettes;   // internal faces
    std::vector<LocalOperator> plaquette;  // B_p from the first site of each walk
};

OperatorSet build_operators(const StateSpace& s, const OperatorOptions& opt = {});

Report check_idempotence(const StateSpace& s, const OperatorSet& ops);
// Skipped with a warning when the surface is not regular.
Report check_commutation(const StateSpace& s, const OperatorSet& ops);
Report check_site_independence(const StateSpace& s, const OperatorOptions& opt = {});
// L_k L_f = sum L_{f'} L_{k0} and R_f R_k = sum R_{k0} R_{f'} whenever k f = sum f' k0 in C_v.
// Right relations for an edge that meets the face away from the site, or meets it twice, are
// skipped with a warning; they only arise when a face visits a vertex or an edge more than once.
Report check_straightening_representation(const StateSpace& s, const OperatorOptions& opt = {});
Report check_locality(const StateSpace& s, const OperatorSet& ops);
// All of the above.
Report check_lattice(const StateSpace& s, const OperatorSet& ops, const OperatorOptions& opt = {});

// sum (1 - A_v) + sum (1 - B_p) on the full space.
SparseMatrix hamiltonian(const StateSpace& s, const OperatorSet& ops, std::uint64_t max_dim = 4096);

enum class GroundMethod { Trace, Kernel, Both };

struct GroundDimension {
    std::optional<Rational> trace;     // tr(prod A_v prod B_p)
    std::optional<std::size_t> kernel; // dim ker H
    std::size_t dimension = 0;
};

// Trace streams over basis vectors, multiplying from whichever end keeps the vector smaller; kernel builds H and refuses beyond kernel_max.
GroundDimension ground_space_dimension(const StateSpace& s, const OperatorSet& ops,
                                       GroundMethod method = GroundMethod::Trace,
                                       std::uint64_t kernel_max = 4096);

}  // namespace kitaev
