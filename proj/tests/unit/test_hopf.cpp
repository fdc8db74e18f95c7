#include "doctest.h"
#include "fixtures.hpp"
#include "kitaev/error.hpp"

#include <algorithm>

using namespace kitaev;
using namespace fixtures;

namespace {

void require_valid(const HopfAlgebraData& h, const std::string& what) {
    Report r = validate_hopf(h);
    INFO(what << "\n" << r.to_string());
    CHECK(r.ok());
}

}  // namespace

TEST_CASE("group tables") {
    SUBCASE("S3 matches permutation composition") {
        GroupTable g = symmetric_group_3();
        REQUIRE(g.order() == 6);
        auto perm = [&](std::size_t i) {
            const std::string& l = g.labels()[i];
            return std::vector<int>{l[1] - '0', l[2] - '0', l[3] - '0'};
        };
        for (std::size_t a = 0; a < 6; ++a)
            for (std::size_t b = 0; b < 6; ++b) CHECK(perm(g.mul(a, b)) == compose(perm(a), perm(b)));
        CHECK(g.labels()[g.identity()] == "[012]");
    }
    SUBCASE("cyclic groups add exponents") {
        GroupTable z4 = cyclic_group(4);
        for (std::size_t a = 0; a < 4; ++a)
            for (std::size_t b = 0; b < 4; ++b) CHECK(z4.mul(a, b) == (a + b) % 4);
    }
    SUBCASE("bad tables are rejected") {
        CHECK_THROWS_AS(GroupTable({"a", "b"}, {{0, 1}, {1, 1}}), Error);
        CHECK_THROWS_AS(GroupTable({"a", "b"}, {{0, 1}, {0, 1}}), Error);
    }
}

TEST_CASE("Hopf axioms for group algebras, duals and their variants") {
    for (const auto& [name, g] : test_groups()) {
        HopfAlgebraData kg = group_algebra(g);
        HopfAlgebraData dual = dual_hopf(kg);
        require_valid(kg, name);
        require_valid(dual, name + " dual");
        for (int s : {1, -1}) {
            require_valid(signed_hopf(kg, s), name + " signed");
            require_valid(signed_hopf(dual, s), name + " dual signed");
        }
        require_valid(op_cop(kg), name + " op cop");
        require_valid(cop(kg), name + " cop");
        require_valid(cop(dual), name + " dual cop");
        require_valid(op_cop(dual), name + " dual op cop");
    }
    require_valid(tensor_hopf(group_algebra(cyclic_group(2)), group_algebra(cyclic_group(3))), "Z2 x Z3");
    require_valid(trivial_hopf(), "trivial");
}

TEST_CASE("group algebra structure is the obvious one") {
    GroupTable g = symmetric_group_3();
    HopfAlgebraData kg = group_algebra(g);
    for (std::size_t a = 0; a < 6; ++a) {
        CHECK(kg.counit[a] == 1);
        CHECK(kg.comult[a] == SparseVec{{a * 6 + a, Rational(1)}});
        CHECK(kg.apply_antipode(e(a)) == e(g.inverse(a)));
        for (std::size_t b = 0; b < 6; ++b) CHECK(kg.algebra.product(a, b) == e(g.mul(a, b)));
    }
}

TEST_CASE("duality swaps the structures") {
    HopfAlgebraData kg = group_algebra(symmetric_group_3());
    HopfAlgebraData d = dual_hopf(kg);
    // Functions on the group: delta_a delta_b = [a = b] delta_a.
    for (std::size_t a = 0; a < 6; ++a)
        for (std::size_t b = 0; b < 6; ++b) CHECK(d.algebra.product(a, b) == (a == b ? e(a) : SparseVec{}));
    HopfAlgebraData dd = dual_hopf(d);
    CHECK(dd.algebra == kg.algebra);
    CHECK(dd.comult == kg.comult);
    CHECK(dd.counit == kg.counit);
    CHECK(dd.antipode == kg.antipode);
}

TEST_CASE("variants behave like their definitions") {
    HopfAlgebraData h = dual_hopf(group_algebra(symmetric_group_3()));
    HopfAlgebraData oc = op_cop(h);
    HopfAlgebraData c = cop(h);
    HopfAlgebraData s = signed_hopf(h, -1);
    CHECK(s == oc);
    CHECK(signed_hopf(h, 1) == h);
    std::size_t n = h.dim();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) CHECK(oc.algebra.product(i, j) == h.algebra.product(j, i));
        Tensor t = h.comult_tensor();
        for (const auto& [f, v] : c.comult[i]) CHECK(t.get({i, f % n, f / n}) == v);
    }
    // S^2 = id for semisimple Hopf algebras in characteristic zero.
    CHECK(h.antipode * h.antipode == SparseMatrix::identity(n));
}

TEST_CASE("Haar integrals") {
    for (const auto& [name, g] : test_groups()) {
        INFO(name);
        HopfAlgebraData kg = group_algebra(g);
        std::size_t n = g.order();
        Vec expected(n, Rational(1, static_cast<long>(n)));
        Vec l = haar_integral(kg).element;
        CHECK(l == expected);
        HopfAlgebraData d = dual_hopf(kg);
        CHECK(haar_integral(d).element == basis_vec(n, g.identity()));
        // Cocommutativity of the integral, for both.
        for (const auto* hp : {&kg, &d}) {
            SparseVec cop_l = hp->coproduct(to_sparse(haar_integral(*hp).element));
            SparseAccumulator acc;
            for (const auto& [f, v] : cop_l) acc.add((f % n) * n + f / n, v);
            CHECK(acc.finish() == cop_l);
        }
    }
}

TEST_CASE("corrupted antipode is caught") {
    HopfAlgebraData kg = group_algebra(cyclic_group(3));
    kg.antipode = SparseMatrix::identity(3);
    Report r = validate_hopf(kg);
    CHECK_FALSE(r.ok());
    REQUIRE(r.find("antipode"));
    CHECK_FALSE(r.find("antipode")->passed);
    CHECK(r.find("coassociativity")->passed);
}

TEST_CASE("tensor Hopf algebra of group algebras is the product group algebra") {
    HopfAlgebraData a = tensor_hopf(group_algebra(cyclic_group(2)), group_algebra(cyclic_group(2)));
    HopfAlgebraData b = group_algebra(klein_four_group());
    CHECK(a.algebra == b.algebra);
    CHECK(a.comult == b.comult);
    CHECK(a.antipode == b.antipode);
    CHECK(same_hopf(share(a), share(a)));
    CHECK_FALSE(same_hopf(share(a), share(dual_hopf(b))));
}
