#include "fixtures.hpp"
#include "kitaev/error.hpp"
#include "kitaev/lattice.hpp"

#include "doctest.h"

#include <cstdlib>

using namespace kitaev;
using fixtures::e;
using fixtures::share;

namespace {

LabeledSurface vacuum_labels(const CellDecomposition& cells, const HopfPtr& h) {
    LabeledSurface s = transparent_labeling(cells, h);
    assign_vertex_modules(s, ModuleChoice::Vacuum);
    return s;
}

void require_ok(const Report& r) {
    INFO(r.to_string());
    REQUIRE(r.ok());
}

}  // namespace

TEST_CASE("local operators agree with explicit Kronecker products") {
    auto z2 = share(group_algebra(kitaev::cyclic_group(2)));
    StateSpace s(vacuum_labels(theta_sphere(2), z2));
    // factors: edges 0, 1 (dim 2), vertices 2, 3
    REQUIRE(s.num_factors() == 4);
    SparseMatrix x = SparseMatrix::from_dense({{Rational(0), Rational(1)}, {Rational(1), Rational(0)}});
    SparseMatrix d = SparseMatrix::from_dense({{Rational(1), Rational(0)}, {Rational(0), Rational(-1)}});
    LocalOperator a{{0}, x}, b{{1}, d};
    LocalOperator ab = compose(s, a, b);
    CHECK(ab.support == std::vector<std::size_t>{0, 1});
    CHECK(ab.matrix == kron(x, d));
    LocalOperator ba = extend(s, LocalOperator{{1}, d}, {0, 1});
    CHECK(ba.matrix == kron(SparseMatrix::identity(2), d));
    CHECK(operators_commute(s, a, b));
    CHECK(!operators_commute(s, a, LocalOperator{{0}, d}));
    // Commutation through a shared factor only on some slices.
    LocalOperator cx = LocalOperator{{0, 1}, kron(d, x)};
    LocalOperator cz = LocalOperator{{1}, d};
    CHECK(!operators_commute(s, cx, cz));
    CHECK(operators_commute(s, cx, LocalOperator{{0}, d}));

    SparseMatrix g = to_global(s, a);
    CHECK(g.rows() == s.dim());
    PreparedOperator pa(s, a);
    for (std::uint64_t i = 0; i < s.dim(); i += 7) {
        CHECK(pa.apply(e(i)) == g.apply(e(i)));
    }
    PreparedOperator pt(s, ab, true);
    SparseMatrix gt = to_global(s, ab).transpose();
    for (std::uint64_t i = 0; i < s.dim(); i += 5) CHECK(pt.apply(e(i)) == gt.apply(e(i)));
}

TEST_CASE("operators on small spheres") {
    auto z2 = share(group_algebra(kitaev::cyclic_group(2)));
    auto s3 = share(group_algebra(kitaev::symmetric_group_3()));
    for (const auto& [label, cells, h] :
         {std::tuple{"segment Z2", segment_sphere(), z2}, std::tuple{"digon Z2", theta_sphere(2), z2},
          std::tuple{"theta Z2", theta_sphere(3), z2}, std::tuple{"segment S3", segment_sphere(), s3}}) {
        CAPTURE(label);
        StateSpace s(vacuum_labels(cells, h));
        OperatorSet ops = build_operators(s);
        require_ok(check_idempotence(s, ops));
        require_ok(check_commutation(s, ops));
        require_ok(check_locality(s, ops));
        require_ok(check_site_independence(s));
        require_ok(check_straightening_representation(s));
        GroundDimension g = ground_space_dimension(s, ops, GroundMethod::Both);
        CHECK(g.dimension == 1);
        CHECK(*g.trace == 1);
        CHECK(*g.kernel == 1);
    }
}

TEST_CASE("ground space dimension on closed surfaces") {
    auto z2 = share(group_algebra(kitaev::cyclic_group(2)));
    SUBCASE("tetrahedron") {
        StateSpace s(vacuum_labels(tetrahedron(), z2));
        CHECK(s.dim() == 16384);
        OperatorSet ops = build_operators(s);
        require_ok(check_idempotence(s, ops));
        require_ok(check_commutation(s, ops));
        require_ok(check_straightening_representation(s));
        CHECK(ground_space_dimension(s, ops).dimension == 1);
        CHECK_THROWS_AS(ground_space_dimension(s, ops, GroundMethod::Kernel), Error);
    }
    SUBCASE("checkerboard torus and its mirror") {
        for (const auto& cells : {checkerboard_torus(), mirror(checkerboard_torus())}) {
            StateSpace s(vacuum_labels(cells, z2));
            OperatorSet ops = build_operators(s);
            require_ok(check_idempotence(s, ops));
            require_ok(check_commutation(s, ops));
            require_ok(check_site_independence(s));
            Report st = check_straightening_representation(s);
            require_ok(st);
            // Each face visits both vertices twice.
            CHECK(st.warnings().size() == 1);
            GroundDimension g = ground_space_dimension(s, ops, GroundMethod::Both);
            CHECK(*g.trace == 4);
            CHECK(*g.kernel == 4);
        }
    }
    SUBCASE("disk with one boundary face") {
        CellDecomposition disk = theta_sphere(3);
        disk.external_half_edges = {0};
        StateSpace s(vacuum_labels(disk, z2));
        OperatorSet ops = build_operators(s);
        CHECK(ops.plaquette.size() == 2);
        require_ok(check_idempotence(s, ops));
        require_ok(check_commutation(s, ops));
        require_ok(check_straightening_representation(s));
        CHECK(ground_space_dimension(s, ops, GroundMethod::Both).dimension == 1);
    }
}

TEST_CASE("non-regular surfaces are built but not commutation-checked") {
    auto z2 = share(group_algebra(kitaev::cyclic_group(2)));
    StateSpace s(vacuum_labels(grid_torus(1, 1), z2));
    OperatorSet ops = build_operators(s);
    require_ok(check_idempotence(s, ops));
    require_ok(check_locality(s, ops));
    Report c = check_commutation(s, ops);
    CHECK(c.checks().empty());
    REQUIRE(c.warnings().size() == 1);
    CHECK(c.warnings()[0].find("not regular") != std::string::npos);
    CHECK(ground_space_dimension(s, ops, GroundMethod::Both).dimension == 4);
}

TEST_CASE("a flipped plaquette sign is detected") {
    auto z2 = share(group_algebra(kitaev::cyclic_group(2)));
    auto z3 = share(group_algebra(kitaev::cyclic_group(3)));
    OperatorOptions flip{true};
    {
        StateSpace s(vacuum_labels(theta_sphere(3), z3));
        require_ok(check_straightening_representation(s));
        OperatorSet bad = build_operators(s, flip);
        Report st = check_straightening_representation(s, flip);
        CHECK(st.find("left straightening is represented")->passed);
        CHECK(!st.find("right straightening is represented")->passed);
        CHECK(!check_commutation(s, bad).find("vertex and plaquette operators commute")->passed);
    }
    {
        // The antipode of kZ2 is the identity, so the flip is invisible there.
        StateSpace s(vacuum_labels(theta_sphere(2), z2));
        require_ok(check_straightening_representation(s, flip));
    }
    {
        auto s3 = share(group_algebra(kitaev::symmetric_group_3()));
        StateSpace s(vacuum_labels(theta_sphere(2), s3));
        CHECK(ground_space_dimension(s, build_operators(s)).dimension == 1);
        try {
            ground_space_dimension(s, build_operators(s, flip));
            FAIL("expected a non-integer trace");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::NonIntegerTrace);
        }
    }
}

TEST_CASE("dimension guard") {
    auto z2 = share(group_algebra(kitaev::cyclic_group(2)));
    auto z3 = share(group_algebra(kitaev::cyclic_group(3)));
    auto kind = [](auto&& f) {
        try {
            f();
        } catch (const Error& e) {
            return e.kind();
        }
        return ErrorKind::InputError;
    };
    CHECK(kind([&] { StateSpace s(vacuum_labels(grid_torus(2, 2), z3)); }) == ErrorKind::DimensionGuardExceeded);
    CHECK(kind([&] { StateSpace s(vacuum_labels(theta_sphere(2), z2), 8); }) == ErrorKind::DimensionGuardExceeded);
    ::setenv("KITAEV_MAX_DIM", "10", 1);
    CHECK(default_max_dim() == 10);
    CHECK(kind([&] { StateSpace s(vacuum_labels(theta_sphere(2), z2)); }) == ErrorKind::DimensionGuardExceeded);
    ::unsetenv("KITAEV_MAX_DIM");
    CHECK(default_max_dim() == (std::uint64_t{1} << 20));
    LabeledSurface unassigned = transparent_labeling(theta_sphere(2), z2);
    CHECK(kind([&] { StateSpace s(unassigned); }) == ErrorKind::UnlabeledCell);
}
