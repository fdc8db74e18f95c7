#include "doctest.h"
#include "fixtures.hpp"
#include "kitaev/error.hpp"
#include "kitaev/labeling.hpp"

using namespace kitaev;
using namespace fixtures;

namespace {

void require_ok(const Report& r, const std::string& what) {
    INFO(what << "\n" << r.to_string());
    CHECK(r.ok());
}

LabeledSurface defect_loop(const HopfPtr& h) {
    LabeledSurface s = transparent_labeling(grid_torus(2, 2), h);
    auto k = std::make_shared<const BicomoduleAlgebraData>(trivial_bicomodule(h, h));
    s.edge_labels[1] = k;
    s.edge_labels[5] = k;
    return s;
}

// Dimension of the two-sided ideal generated by all commutators; a one-dimensional module
// exists iff this is smaller than the algebra.
std::size_t commutator_ideal_dim(const AlgebraData& a) {
    EchelonBasis span(a.dim);
    std::vector<SparseVec> queue;
    auto push = [&](const SparseVec& v) {
        SparseVec r = span.reduce(v);
        if (!r.empty() && span.insert(r)) queue.push_back(r);
    };
    for (std::size_t i = 0; i < a.dim; ++i) {
        for (std::size_t j = i + 1; j < a.dim; ++j) {
            SparseVec c = a.product(i, j);
            axpy(c, Rational(-1), a.product(j, i));
            push(c);
        }
    }
    while (!queue.empty() && span.size() < a.dim) {
        SparseVec v = queue.back();
        queue.pop_back();
        for (std::size_t k = 0; k < a.dim; ++k) {
            push(a.multiply(e(k), v));
            push(a.multiply(v, e(k)));
        }
    }
    return span.size();
}

}  // namespace

TEST_CASE("one-dimensional vertex modules exist only at valence one") {
    HopfPtr z2 = share(group_algebra(cyclic_group(2)));
    // D(kZ2) is commutative.
    CHECK(commutator_ideal_dim(vertex_algebra(transparent_labeling(segment_sphere(), z2), 0)->materialize()) == 0);
    for (const auto& [name, cells] : {std::pair{"digon", theta_sphere(2)}, std::pair{"theta", theta_sphere(3)},
                                     std::pair{"2x2 torus", grid_torus(2, 2)}}) {
        INFO(name);
        AlgebraData c = vertex_algebra(transparent_labeling(cells, z2), 0)->materialize();
        CHECK(commutator_ideal_dim(c) == c.dim);
    }
}

TEST_CASE("single transparent half-edge gives the Drinfeld double") {
    for (const auto& [name, g] : {NamedGroup{"Z2", cyclic_group(2)}, NamedGroup{"Z3", cyclic_group(3)},
                                  NamedGroup{"S3", symmetric_group_3()}}) {
        INFO(name);
        HopfPtr h = share(group_algebra(g));
        LabeledSurface s = transparent_labeling(segment_sphere(), h);
        VertexAlgebraPtr cv = vertex_algebra(s, 0);
        REQUIRE(cv->num_edges() == 1);
        CHECK(cv->edge(0).sign == 1);
        AlgebraData c = cv->materialize();
        CrossedProductAlgebra d = drinfeld_double(h);
        CHECK(c.dim == d.product.dim);
        CHECK(c.products == d.product.products);
        CHECK(c.unit == d.product.unit);
        // The incoming end gives the double built from the opposite bicomodule.
        VertexAlgebraPtr cw = vertex_algebra(s, 1);
        CHECK(cw->edge(0).sign == -1);
        require_ok(validate_algebra(cw->materialize()), name + " incoming");
    }
}

TEST_CASE("materialized vertex algebras are associative with the factors as subalgebras") {
    HopfPtr z2 = share(group_algebra(cyclic_group(2)));
    HopfPtr s3 = share(group_algebra(symmetric_group_3()));
    for (const auto& [label, s] : {std::pair{"digon Z2", transparent_labeling(theta_sphere(2), z2)},
                                  std::pair{"theta Z2", transparent_labeling(theta_sphere(3), z2)},
                                  std::pair{"segment S3", transparent_labeling(segment_sphere(), s3)}}) {
        for (std::size_t v = 0; v < s.surface->num_vertices(); ++v) {
            VertexAlgebraPtr cv = vertex_algebra(s, v);
            AlgebraData c = cv->materialize();
            require_ok(validate_algebra(c), std::string(label) + " vertex " + std::to_string(v));
        }
    }
}

TEST_CASE("vertex algebra dimensions") {
    HopfPtr h = share(group_algebra(cyclic_group(2)));
    LabeledSurface s = transparent_labeling(grid_torus(2, 2), h);
    for (std::size_t v = 0; v < 4; ++v) CHECK(vertex_algebra(s, v)->dim() == 256);
    LabeledSurface d = defect_loop(h);
    // Vertex (0,0) meets both defect half-edges.
    CHECK(vertex_algebra(d, 0)->dim() == 64);
    CHECK(vertex_algebra(d, 1)->dim() == 256);
}

TEST_CASE("site straightening inside the vertex algebra") {
    HopfPtr h = share(group_algebra(symmetric_group_3()));
    LabeledSurface s = transparent_labeling(checkerboard_torus(), h);
    VertexAlgebraPtr cv = vertex_algebra(s, 0);
    // Each site pairs an edge whose left leg acts from the right with an edge whose right leg acts from the left.
    for (std::size_t i = 0; i < cv->num_sites(); ++i) {
        const auto& st = cv->site(i);
        // Sites with equal signs are covered by the double and the balancing tests.
        if (st.eps_left == st.eps_right) continue;
        BalancingAlgebra bal = cv->site_balancing(i);
        LeftComoduleAlgebra k = site_comodule(*cv->edge(st.left_factor).algebra, *cv->edge(st.right_factor).algebra,
                                              bal.as_module_algebra.hopf);
        CrossedProductAlgebra c = crossed_product(bal.as_module_algebra, k);
        require_ok(check_site_straightening(c, bal, cv->edge(st.left_factor).algebra.get(),
                                            *cv->edge(st.right_factor).algebra),
                   "site " + std::to_string(i));
    }
}

TEST_CASE("regular modules") {
    HopfPtr z2 = share(group_algebra(cyclic_group(2)));
    HopfPtr z3 = share(group_algebra(cyclic_group(3)));
    VertexAlgebraPtr d2 = vertex_algebra(transparent_labeling(segment_sphere(), z2), 0);
    VertexModule m2 = regular_module(*d2);
    CHECK(m2.dim == 4);
    require_ok(validate_vertex_module(*d2, m2), "D(Z2)");
    VertexAlgebraPtr d3 = vertex_algebra(transparent_labeling(segment_sphere(), z3), 0);
    require_ok(validate_vertex_module(*d3, regular_module(*d3)), "D(Z3)");
    // Against left multiplication in the materialized algebra.
    VertexAlgebraPtr cv = vertex_algebra(transparent_labeling(theta_sphere(2), z3), 1);
    AlgebraData c = cv->materialize();
    VertexModule m = regular_module(*cv);
    for (std::uint64_t x = 0; x < c.dim; ++x) CHECK(m.basis_action(*cv, x) == c.left_multiplication(e(x)));
    VertexAlgebraPtr big = vertex_algebra(defect_loop(z2), 0);
    VertexModule mb = regular_module(*big);
    CHECK(mb.dim == 64);
    require_ok(validate_vertex_module(*big, mb), "defect vertex");
}

TEST_CASE("vacuum modules") {
    HopfPtr z2 = share(group_algebra(cyclic_group(2)));
    SUBCASE("valence one is the trivial representation of the double") {
        for (const auto& g : {cyclic_group(2), symmetric_group_3()}) {
            HopfPtr h = share(group_algebra(g));
            VertexAlgebraPtr cv = vertex_algebra(transparent_labeling(segment_sphere(), h), 0);
            VertexModule m = vacuum_module(*cv);
            REQUIRE(m.dim == 1);
            require_ok(validate_vertex_module(*cv, m), "valence one");
            HopfAlgebraData dual = dual_hopf(*h);
            for (std::size_t f = 0; f < h->dim(); ++f) CHECK(m.site_actions[0][f].at(0, 0) == dual.counit[f]);
            for (std::size_t k = 0; k < h->dim(); ++k) CHECK(m.edge_actions[0][k].at(0, 0) == h->counit[k]);
        }
    }
    SUBCASE("transparent torus vertices") {
        LabeledSurface s = transparent_labeling(grid_torus(2, 2), z2);
        for (std::size_t v = 0; v < 4; ++v) {
            VertexAlgebraPtr cv = vertex_algebra(s, v);
            VertexModule m = vacuum_module(*cv);
            // Four group-valued site labels whose product around the vertex is trivial.
            CHECK(m.dim == 8);
            require_ok(validate_vertex_module(*cv, m), "torus vertex");
        }
    }
    SUBCASE("mixed orientations over S3") {
        HopfPtr s3 = share(group_algebra(symmetric_group_3()));
        LabeledSurface s = transparent_labeling(checkerboard_torus(), s3);
        for (std::size_t v = 0; v < 2; ++v) {
            VertexAlgebraPtr cv = vertex_algebra(s, v);
            require_ok(validate_vertex_module(*cv, vacuum_module(*cv)), "checkerboard vertex");
        }
    }
    SUBCASE("defect vertex") {
        LabeledSurface s = defect_loop(z2);
        VertexAlgebraPtr cv = vertex_algebra(s, 0);
        require_ok(validate_vertex_module(*cv, vacuum_module(*cv)), "defect vertex");
    }
    SUBCASE("a matrix algebra edge has no character") {
        GroupTable v4 = klein_four_group();
        HopfPtr h = share(group_algebra(v4));
        LabeledSurface s = transparent_labeling(grid_torus(2, 2), h);
        s.edge_labels[0] =
            std::make_shared<const BicomoduleAlgebraData>(twisted_subgroup_algebra(v4, h, {0, 1, 2, 3}, klein_sign_cocycle()));
        CHECK_FALSE(find_character(*s.edge_labels[0]));
        VertexAlgebraPtr cv = vertex_algebra(s, 0);
        try {
            vacuum_module(*cv);
            FAIL("expected NoCharacter");
        } catch (const Error& err) {
            CHECK(err.kind() == ErrorKind::NoCharacter);
        }
    }
}

TEST_CASE("module validator pinpoints broken relations") {
    HopfPtr z3 = share(group_algebra(cyclic_group(3)));
    VertexAlgebraPtr cv = vertex_algebra(transparent_labeling(segment_sphere(), z3), 0);
    VertexModule m = regular_module(*cv);
    // Acting with b_g by the identity keeps the edge factor a representation only if g is trivial.
    m.edge_actions[0][1] = m.edge_actions[0][2];
    Report r = validate_vertex_module(*cv, m);
    CHECK_FALSE(r.ok());
    REQUIRE(r.first_failure());
    CHECK(r.first_failure()->name == "edge 0 representation");
    CHECK_THROWS_AS(explicit_module(*cv, m.dim, m.site_actions, m.edge_actions), Error);
    VertexModule good = regular_module(*cv);
    CHECK_NOTHROW(explicit_module(*cv, good.dim, good.site_actions, good.edge_actions));
}

TEST_CASE("labeling validation") {
    HopfPtr z2 = share(group_algebra(cyclic_group(2)));
    HopfPtr z3 = share(group_algebra(cyclic_group(3)));
    LabeledSurface s = transparent_labeling(grid_torus(2, 2), z2);
    Report missing = validate_labeling(s);
    CHECK_FALSE(missing.find("all cells labeled")->passed);
    assign_vertex_modules(s, ModuleChoice::Vacuum);
    require_ok(validate_labeling(s), "transparent torus");

    LabeledSurface d = defect_loop(z2);
    assign_vertex_modules(d, ModuleChoice::Vacuum);
    require_ok(validate_labeling(d), "defect loop");

    LabeledSurface bad = s;
    bad.edge_labels[3] = std::make_shared<const BicomoduleAlgebraData>(regular_bicomodule(z3));
    Report r = validate_labeling(bad);
    const Check* c = r.find("edge labels match adjacent faces");
    REQUIRE(c);
    CHECK_FALSE(c->passed);
    CHECK(c->detail == "edge 3");
}

TEST_CASE("boundary labels") {
    HopfPtr z2 = share(group_algebra(cyclic_group(2)));
    CellDecomposition c = theta_sphere(3);
    c.external_half_edges = {0};
    LabeledSurface s = transparent_labeling(c, z2);
    assign_vertex_modules(s, ModuleChoice::Vacuum);
    require_ok(validate_labeling(s), "disk");
    for (const auto& k : s.edge_labels) require_ok(validate_bicomodule(*k), "boundary edge");
}
