#pragma once

#include "kitaev/hopf.hpp"

#include <functional>
#include <map>
#include <memory>

namespace kitaev {

// Algebra K with a combined coaction K -> H1 (x) K (x) H2, k -> k_(-1) (x) k_(0) (x) k_(1).
// coaction[k] is flattened over (a, k0, b) -> (a * dim K + k0) * dim H2 + b.
struct BicomoduleAlgebraData {
    AlgebraData algebra;
    HopfPtr left_hopf;
    HopfPtr right_hopf;
    std::vector<SparseVec> coaction;

    std::size_t dim() const { return algebra.dim; }
    std::size_t left_dim() const { return left_hopf->dim(); }
    std::size_t right_dim() const { return right_hopf->dim(); }

    struct Term {
        std::size_t left;
        std::size_t middle;
        std::size_t right;
        Rational coeff;
    };
    std::vector<Term> terms(std::size_t k) const;
    std::size_t flat(std::size_t a, std::size_t k0, std::size_t b) const {
        return (a * dim() + k0) * right_dim() + b;
    }

    // One-sided coactions obtained by applying the counit to the other leg.
    SparseVec left_coaction(std::size_t k) const;   // over a * dim + k0
    SparseVec right_coaction(std::size_t k) const;  // over k0 * dim H2 + b

    bool operator==(const BicomoduleAlgebraData& other) const;
};

using BicomodulePtr = std::shared_ptr<const BicomoduleAlgebraData>;

BicomoduleAlgebraData regular_bicomodule(const HopfPtr& h);
// The one-dimensional algebra with 1 -> 1 (x) 1 (x) 1 between any two Hopf algebras.
BicomoduleAlgebraData trivial_bicomodule(const HopfPtr& left, const HopfPtr& right);

// Normalized 2-cocycle on a subgroup with values +1/-1; absent pairs default to +1.
using Cocycle = std::map<std::pair<std::size_t, std::size_t>, int>;

BicomoduleAlgebraData twisted_subgroup_algebra(const GroupTable& g, const HopfPtr& kg,
                                               const std::vector<std::size_t>& subgroup,
                                               const Cocycle& zeta);
// The nontrivial sign cocycle on Z2 x Z2 (elements in the order of klein_four_group()).
Cocycle klein_sign_cocycle();

BicomoduleAlgebraData opposite_bicomodule(const BicomoduleAlgebraData& k);

Report validate_bicomodule(const BicomoduleAlgebraData& k);

}  // namespace kitaev
