#pragma once

#include "kitaev/algebra.hpp"

#include <memory>

namespace kitaev {

// comult[i] is Delta(b_i) flattened over (j, k) -> j * dim + k.
// Column i of antipode is S(b_i).
struct HopfAlgebraData {
    AlgebraData algebra;
    std::vector<SparseVec> comult;
    Vec counit;
    SparseMatrix antipode;

    std::size_t dim() const { return algebra.dim; }
    Tensor comult_tensor() const;  // slots (i, j, k): coefficient of b_j (x) b_k in Delta(b_i)

    SparseVec coproduct(const SparseVec& x) const;
    // Delta applied n-1 times; result flattened with the first leg most significant.
    SparseVec iterated_coproduct(const SparseVec& x, std::size_t legs) const;
    SparseVec apply_antipode(const SparseVec& x) const;
    Rational apply_counit(const SparseVec& x) const;
    // <x>^{+1} = x, <x>^{-1} = S(x).
    SparseVec signed_power(const SparseVec& x, int sign) const;

    bool operator==(const HopfAlgebraData& other) const;
};

using HopfPtr = std::shared_ptr<const HopfAlgebraData>;

HopfAlgebraData make_hopf(AlgebraData algebra, std::vector<SparseVec> comult, Vec counit,
                          SparseMatrix antipode);

// Multiplication table of a finite group, validated on construction.
class GroupTable {
public:
    GroupTable(std::vector<std::string> labels, std::vector<std::vector<std::size_t>> table);

    std::size_t order() const { return labels_.size(); }
    std::size_t identity() const { return identity_; }
    std::size_t mul(std::size_t a, std::size_t b) const { return table_[a][b]; }
    std::size_t inverse(std::size_t a) const { return inverse_[a]; }
    const std::vector<std::string>& labels() const { return labels_; }
    std::size_t index_of(const std::string& label) const;

private:
    std::vector<std::string> labels_;
    std::vector<std::vector<std::size_t>> table_;
    std::size_t identity_ = 0;
    std::vector<std::size_t> inverse_;
};

GroupTable cyclic_group(std::size_t n);
GroupTable klein_four_group();
GroupTable symmetric_group_3();
GroupTable direct_product(const GroupTable& a, const GroupTable& b);

HopfAlgebraData group_algebra(const GroupTable& g);
HopfAlgebraData trivial_hopf();
HopfAlgebraData dual_hopf(const HopfAlgebraData& h);
HopfAlgebraData op_cop(const HopfAlgebraData& h);
HopfAlgebraData cop(const HopfAlgebraData& h);
// H^{+1} = H, H^{-1} = H^{op cop}.
HopfAlgebraData signed_hopf(const HopfAlgebraData& h, int sign);
HopfAlgebraData tensor_hopf(const HopfAlgebraData& a, const HopfAlgebraData& b);

struct HaarIntegral {
    Vec element;
};

HaarIntegral haar_integral(const HopfAlgebraData& h);
Report validate_hopf(const HopfAlgebraData& h);

// Structural equality on shared handles.
bool same_hopf(const HopfPtr& a, const HopfPtr& b);

}  // namespace kitaev
