#pragma once

#include "kitaev/separability.hpp"

namespace kitaev {

// Left H-module algebra; action[h * dim A + a] = b_h . b_a.
struct ModuleAlgebraData {
    HopfPtr hopf;
    AlgebraData algebra;
    std::vector<SparseVec> action;

    const SparseVec& act(std::size_t h, std::size_t a) const { return action[h * algebra.dim + a]; }
    SparseVec act(const SparseVec& h, const SparseVec& a) const;
};

Report validate_module_algebra(const ModuleAlgebraData& m);

// Left H-comodule algebra; coaction[k] over h * dim K + k0.
struct LeftComoduleAlgebra {
    HopfPtr hopf;
    AlgebraData algebra;
    std::vector<SparseVec> coaction;
};

Report validate_left_comodule(const LeftComoduleAlgebra& k);

// The dual algebra of H with the two-sided action a' (x) a (x) f -> f(<a'>^{-eps'} ? <a>^{eps})
// over (H^{eps'})^cop (x) H^{eps}.
struct BalancingAlgebra {
    HopfPtr base;
    int eps_left = 1;   // eps'
    int eps_right = 1;  // eps
    ModuleAlgebraData as_module_algebra;
};

HopfPtr balancing_hopf(const HopfPtr& h, int eps_left, int eps_right);
BalancingAlgebra balancing_algebra(const HopfPtr& h, int eps_left, int eps_right);

// Coefficients over c of delta^m(L b_c R) for elements L, R of H.
SparseVec twisted_functional(const HopfAlgebraData& h, std::size_t m, const SparseVec& left,
                             const SparseVec& right);

// K_{e'} (x) K_e as a left comodule algebra over (H^{eps'})^cop (x) H^{eps}, using the right leg
// of the first factor and the left leg of the second. Both factors are already sign-adjusted.
LeftComoduleAlgebra site_comodule(const BicomoduleAlgebraData& left_factor,
                                  const BicomoduleAlgebraData& right_factor, const HopfPtr& acting);
// A single half-edge bounding the site on both sides.
LeftComoduleAlgebra site_comodule_single(const BicomoduleAlgebraData& k, const HopfPtr& acting);

// Underlying space A (x) K, basis a * dim K + k.
struct CrossedProductAlgebra {
    ModuleAlgebraData module_alg;
    LeftComoduleAlgebra comodule_alg;
    AlgebraData product;

    std::size_t a_dim() const { return module_alg.algebra.dim; }
    std::size_t k_dim() const { return comodule_alg.algebra.dim; }
    std::size_t index(std::size_t a, std::size_t k) const { return a * k_dim() + k; }
};

CrossedProductAlgebra crossed_product(const ModuleAlgebraData& a, const LeftComoduleAlgebra& k);
CrossedProductAlgebra drinfeld_double(const HopfPtr& h);

// A and K are subalgebras.
Report check_embeddings(const CrossedProductAlgebra& c);
// k . f = f(<b>^{-eps'} ? <a>^{eps}) . k_(0), computed from the bicomodule legs directly.
Report check_site_straightening(const CrossedProductAlgebra& c, const BalancingAlgebra& bal,
                               const BicomoduleAlgebraData* left_factor,
                               const BicomoduleAlgebraData& right_factor);
// h . f = f(S(h_(3)) ? h_(1)) . h_(2)
Report check_double_straightening(const CrossedProductAlgebra& d, const HopfAlgebraData& h);
// Trace-form idempotents of A and K commute in C (x) C^op and their product separates C.
Report check_idempotents_commute(const CrossedProductAlgebra& c);

// Whether a linear functional on an algebra is multiplicative and unital.
bool is_character(const AlgebraData& a, const Vec& chi);

}  // namespace kitaev
