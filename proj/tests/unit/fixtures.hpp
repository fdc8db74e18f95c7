#pragma once

#include "kitaev/hopf.hpp"

#include <memory>
#include <string>
#include <vector>

namespace fixtures {

using namespace kitaev;

inline HopfPtr share(HopfAlgebraData h) { return std::make_shared<const HopfAlgebraData>(std::move(h)); }

inline SparseVec e(std::size_t i) { return SparseVec{{i, Rational(1)}}; }

struct NamedGroup {
    std::string name;
    GroupTable table;
};

inline std::vector<NamedGroup> test_groups() {
    return {{"Z1", cyclic_group(1)}, {"Z2", cyclic_group(2)},         {"Z3", cyclic_group(3)},
            {"Z4", cyclic_group(4)}, {"Z2xZ2", klein_four_group()}, {"S3", symmetric_group_3()}};
}

// Independent group multiplication on permutations of {0,1,2}: (p q)(i) = p(q(i)).
inline std::vector<int> compose(const std::vector<int>& p, const std::vector<int>& q) {
    return {p[q[0]], p[q[1]], p[q[2]]};
}

}  // namespace fixtures
