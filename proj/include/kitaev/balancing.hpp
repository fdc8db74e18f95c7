#pragma once

#include "kitaev/labeling.hpp"

#include <functional>

namespace kitaev {

// A left H-module given by the matrix of each basis element of H.
struct HModule {
    std::size_t dim = 0;
    std::vector<SparseMatrix> action;

    SparseMatrix act(const SparseVec& h) const;
};

HModule trivial_hmodule(const HopfAlgebraData& h);
HModule regular_hmodule(const HopfAlgebraData& h);
// Diagonal action through the coproduct.
HModule tensor_hmodule(const HopfAlgebraData& h, const HModule& x, const HModule& y);

// A module over H^*_{eps,eps'} # K, where K is an H^eps-H^eps' bicomodule algebra.
struct CrossedModule {
    HopfPtr hopf;
    int eps = 1;
    int eps_prime = 1;
    BicomodulePtr comodule;
    std::size_t dim = 0;
    std::vector<SparseMatrix> dual_action;  // rho(e^i) for the dual basis of H^*
    std::vector<SparseMatrix> k_action;     // kappa(b_k) for the basis of K
};

// Representations of H^* and K and the straightening k f = f(<k_(1)>^{-eps'} ? <k_(-1)>^{eps}) k_(0).
Report validate_crossed_module(const CrossedModule& m);
// Left multiplication on H^*_{eps,eps'} # K.
CrossedModule regular_crossed_module(const HopfPtr& h, int eps, int eps_prime, const BicomodulePtr& k);

// beta_X : X (x) M -> M (x) X, indices x * dim M + m and m * dim X + x.
struct BalancingFamily {
    HopfPtr hopf;
    int eps = 1;
    int eps_prime = 1;
    BicomodulePtr comodule;
    std::size_t dim = 0;
    std::vector<SparseMatrix> k_action;
    std::function<SparseMatrix(const HModule&)> beta;
};

// beta_X(x (x) m) = sum_i e^i.m (x) e_i.x for dual bases; throws ModuleInvalid on a bad module.
BalancingFamily balancing_from_module(const CrossedModule& m);
SparseMatrix balancing_matrix(const CrossedModule& m, const HModule& x);
// rho(f)(m) = (id (x) f) beta_{H_reg}(1 (x) m); throws NotAModule if the result is not a module.
CrossedModule module_from_balancing(const BalancingFamily& b);

// The modules k, H_reg and H_reg (x) H_reg.
std::vector<std::pair<std::string, HModule>> test_family(const HopfAlgebraData& h);

// Triangle, hexagon on all pairs of the family, naturality for right multiplications, the
// counit, the integral and the coproduct, K-linearity and invertibility.
Report check_balancing(const BalancingFamily& b);
// Module -> balancing -> module and balancing -> module -> balancing are identities.
Report check_round_trips(const CrossedModule& m);
Report check_round_trips(const BalancingFamily& b);

// For every site of C_v, restricts m to H_p^* # K_v and runs the checks above.
Report verify_gluing_equivalence(const VertexAlgebra& cv, const VertexModule& m);
// Same on the regular module of the vertex algebra at v.
Report verify_gluing_equivalence(const LabeledSurface& s, std::size_t v);

}  // namespace kitaev
