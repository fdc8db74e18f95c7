#include "doctest.h"
#include "kitaev/error.hpp"
#include "kitaev/surface.hpp"

#include <algorithm>
#include <map>

using namespace kitaev;

namespace {

struct Shape {
    std::string name;
    CellDecomposition cells;
    std::size_t faces;
    long euler;
    bool regular;
};

std::vector<Shape> shapes() {
    return {{"2x2 torus", grid_torus(2, 2), 4, 0, true},
            {"3x3 torus", grid_torus(3, 3), 9, 0, true},
            {"1x1 torus", grid_torus(1, 1), 1, 0, false},
            {"checkerboard torus", checkerboard_torus(), 2, 0, true},
            {"tetrahedron", tetrahedron(), 4, 2, true},
            {"theta 3", theta_sphere(3), 3, 2, true},
            {"digon sphere", theta_sphere(2), 2, 2, true},
            {"segment", segment_sphere(), 1, 2, false},
            {"single loop", single_loop_sphere(), 2, 2, false}};
}

}  // namespace

TEST_CASE("face counts, Euler characteristic and regularity") {
    for (const auto& sh : shapes()) {
        INFO(sh.name);
        Surface s(sh.cells);
        CHECK(s.num_faces() == sh.faces);
        CHECK(s.euler_characteristic() == sh.euler);
        CHECK(regularity_check(s).ok() == sh.regular);
    }
}

TEST_CASE("1x1 torus fails both regularity conditions") {
    Report r = regularity_check(Surface(grid_torus(1, 1)));
    CHECK_FALSE(r.find("no looping edges")->passed);
    CHECK_FALSE(r.find("no face meets an edge twice")->passed);
}

TEST_CASE("incidence counts") {
    for (const auto& sh : shapes()) {
        INFO(sh.name);
        Surface s(sh.cells);
        std::size_t valence = 0, incidences = 0;
        for (const auto& r : sh.cells.rotations) valence += r.size();
        for (const auto& f : s.faces()) incidences += f.boundary.size();
        CHECK(valence == 2 * s.num_edges());
        CHECK(incidences == 2 * s.num_edges());
        CHECK(s.num_sites() == valence);
    }
}

TEST_CASE("sites at vertices and plaquettes correspond") {
    for (const auto& sh : shapes()) {
        INFO(sh.name);
        Surface s(sh.cells);
        std::map<std::size_t, std::size_t> seen;
        for (const auto& f : s.faces()) {
            for (const auto& st : f.boundary) {
                const SiteData& site = s.site(st.site);
                CHECK(site.plaquette == f.plaquette);
                CHECK(site.right_half_edge == st.site);
                CHECK(site.left_half_edge == s.ccw_next(st.site));
                CHECK(s.cells().vertex_of(site.left_half_edge) == site.vertex);
                ++seen[st.site];
            }
        }
        CHECK(seen.size() == s.num_sites());
        for (const auto& [id, n] : seen) CHECK(n == 1);
    }
}

TEST_CASE("grid faces are walked clockwise") {
    Surface s(grid_torus(3, 3));
    // The face departed into eastward from (0,0) goes east, south, west, north.
    const PlaquetteWalk& f = s.face(s.face_of(half_edge(0, false)));
    REQUIRE(f.boundary.size() == 4);
    std::vector<int> signs;
    for (const auto& st : f.boundary) signs.push_back(st.sign);
    std::rotate(signs.begin(), std::find(signs.begin(), signs.end(), 1), signs.end());
    CHECK(signs == std::vector<int>{1, -1, -1, 1});
    // Edge 0 runs east from (0,0); its right face lies south of it and its left face north.
    CHECK(s.right_face(0) == f.plaquette);
    CHECK(s.left_face(0) != s.right_face(0));
}

TEST_CASE("signs") {
    Surface s(tetrahedron());
    CHECK(half_edge_sign(s, 0, 0) == 1);
    CHECK(half_edge_sign(s, 1, 0) == -1);
    CHECK_THROWS_AS(half_edge_sign(s, 3, 0), Error);
    for (std::size_t e = 0; e < s.num_edges(); ++e) {
        CHECK(plaquette_edge_sign(s, s.right_face(e), e) == 1);
        CHECK(plaquette_edge_sign(s, s.left_face(e), e) == -1);
    }
    std::size_t p = s.right_face(0);
    std::size_t missing = 6;
    for (std::size_t e = 0; e < 6; ++e) {
        bool found = false;
        for (const auto& st : s.face(p).boundary) found = found || st.edge == e;
        if (!found) missing = e;
    }
    REQUIRE(missing < 6);
    CHECK_THROWS_AS(plaquette_edge_sign(s, p, missing), Error);
}

TEST_CASE("malformed rotations are rejected") {
    CellDecomposition c = tetrahedron();
    c.rotations[0] = {0, 4};
    CHECK_THROWS_AS(Surface{c}, Error);
    c = tetrahedron();
    c.rotations[0] = {0, 4, 3};
    CHECK_THROWS_AS(Surface{c}, Error);
    c = tetrahedron();
    c.rotations[0] = {0, 4, 4};
    CHECK_THROWS_AS(Surface{c}, Error);
    c = tetrahedron();
    c.rotations.pop_back();
    CHECK_THROWS_AS(trace_faces(c), Error);
}

TEST_CASE("mirroring flips vertex signs and keeps face data") {
    for (const auto& sh : shapes()) {
        INFO(sh.name);
        Surface a(sh.cells), b(mirror(sh.cells));
        REQUIRE(a.num_faces() == b.num_faces());
        for (std::size_t e = 0; e < a.num_edges(); ++e) {
            const Edge& ed = a.cells().edges[e];
            if (ed.source != ed.target) CHECK(half_edge_sign(b, ed.source, e) == -half_edge_sign(a, ed.source, e));
        }
        auto signature = [](const Surface& s) {
            std::vector<std::vector<std::pair<std::size_t, int>>> out;
            for (const auto& f : s.faces()) {
                std::vector<std::pair<std::size_t, int>> x;
                for (const auto& st : f.boundary) x.emplace_back(st.edge, st.sign);
                std::sort(x.begin(), x.end());
                out.push_back(x);
            }
            std::sort(out.begin(), out.end());
            return out;
        };
        CHECK(signature(a) == signature(b));
        CHECK(mirror(mirror(sh.cells)).rotations == sh.cells.rotations);
    }
}

TEST_CASE("external faces") {
    CellDecomposition c = theta_sphere(3);
    c.external_half_edges = {0};
    Surface s(c);
    std::size_t ext = 0;
    for (std::size_t p = 0; p < s.num_faces(); ++p) ext += s.is_external(p);
    CHECK(ext == 1);
    CHECK(s.is_external(s.face_of(0)));
    Surface m(mirror(c));
    CHECK(m.is_external(m.face_of(0)));
}

TEST_CASE("anchor order is clockwise from the lowest half-edge") {
    Surface s(grid_torus(2, 2));
    // Rotation at (0,0) is east, north, west, south counterclockwise.
    const auto& r = s.cells().rotations[0];
    auto cw = s.clockwise_from_anchor(0);
    REQUIRE(cw.size() == 4);
    CHECK(cw[0] == *std::min_element(r.begin(), r.end()));
    for (std::size_t k = 0; k < 4; ++k) CHECK(s.ccw_next(cw[(k + 1) % 4]) == cw[k]);
}
