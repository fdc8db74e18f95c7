#pragma once

#include "kitaev/comodule.hpp"

namespace kitaev {

// p = sum p1 (x) p2 in A (x) A, flattened as i * dim + j.
struct SeparabilityIdempotent {
    std::size_t dim = 0;
    SparseVec element;

    Tensor as_tensor() const;
    bool operator==(const SeparabilityIdempotent& other) const {
        return dim == other.dim && element == other.element;
    }
};

enum class Side { Left, Right };

// Trace form T(a, b) = tr(L_{ab}) as a dense Gram matrix.
DenseMatrix trace_form(const AlgebraData& a);

SeparabilityIdempotent symmetric_separability_idempotent(const AlgebraData& a);
// Invariance, normalization, symmetry.
Report check_separability_identities(const AlgebraData& a, const SeparabilityIdempotent& p);
// p1 p1' (x) p2' p2 summed, the square in A (x) A^op.
SparseVec enveloping_square(const AlgebraData& a, const SeparabilityIdempotent& p);
// Image of x -> p1 x p2 on the regular bimodule.
SparseMatrix bimodule_projection(const AlgebraData& a, const SeparabilityIdempotent& p);

// l_(1) (x) S(l_(2)) for the Haar integral l.
SeparabilityIdempotent haar_separability_idempotent(const HopfAlgebraData& h);
Report check_haar_reduction(const HopfAlgebraData& h);
Report check_coinvariance(const BicomoduleAlgebraData& k, Side side);

SeparabilityIdempotent tensor_idempotent(const SeparabilityIdempotent& p, const SeparabilityIdempotent& q);

}  // namespace kitaev
