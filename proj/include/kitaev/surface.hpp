#pragma once

#include "kitaev/report.hpp"

#include <cstddef>
#include <vector>

namespace kitaev {

struct Edge {
    std::size_t source;
    std::size_t target;
};

// Half-edge 2e sits at the source of e, 2e + 1 at its target.
inline std::size_t half_edge(std::size_t edge, bool at_target) { return 2 * edge + (at_target ? 1 : 0); }
inline std::size_t edge_of(std::size_t h) { return h / 2; }
inline std::size_t twin(std::size_t h) { return h ^ 1; }

// Oriented cell decomposition given as a rotation system.
struct CellDecomposition {
    std::size_t num_vertices = 0;
    std::vector<Edge> edges;
    // Counterclockwise cyclic order of half-edges at each vertex.
    std::vector<std::vector<std::size_t>> rotations;
    // Half-edges whose face (the one they depart into) is a boundary face.
    std::vector<std::size_t> external_half_edges;

    std::size_t num_half_edges() const { return 2 * edges.size(); }
    std::size_t vertex_of(std::size_t h) const {
        return h % 2 ? edges[edge_of(h)].target : edges[edge_of(h)].source;
    }
};

struct SiteData {
    std::size_t vertex;
    std::size_t plaquette;
    std::size_t left_half_edge;   // e'_p, where the walk leaves the vertex
    std::size_t right_half_edge;  // e_p, where the walk enters the vertex
};

struct WalkStep {
    std::size_t site;  // id of the site entered, equal to its right half-edge
    std::size_t edge;  // edge traversed after leaving the site
    int sign;          // +1 when the edge points along the clockwise walk
};

struct PlaquetteWalk {
    std::size_t plaquette;
    bool external = false;
    std::vector<WalkStep> boundary;
};

class Surface {
public:
    explicit Surface(CellDecomposition cells);

    const CellDecomposition& cells() const { return cells_; }
    std::size_t num_vertices() const { return cells_.num_vertices; }
    std::size_t num_edges() const { return cells_.edges.size(); }
    std::size_t num_faces() const { return faces_.size(); }
    long euler_characteristic() const;

    const std::vector<PlaquetteWalk>& faces() const { return faces_; }
    const PlaquetteWalk& face(std::size_t p) const { return faces_[p]; }
    // Sites are indexed by the half-edge through which their walk enters the vertex.
    const SiteData& site(std::size_t id) const { return sites_[id]; }
    std::size_t num_sites() const { return sites_.size(); }

    // Face a half-edge departs into.
    std::size_t face_of(std::size_t h) const { return face_of_[h]; }
    std::size_t right_face(std::size_t e) const { return face_of_[half_edge(e, false)]; }
    std::size_t left_face(std::size_t e) const { return face_of_[half_edge(e, true)]; }

    // Rotation at v starting from its lowest half-edge, then clockwise.
    std::vector<std::size_t> clockwise_from_anchor(std::size_t v) const;
    // Site ids at v in the same order, keyed by their right half-edge.
    std::vector<std::size_t> vertex_sites(std::size_t v) const { return clockwise_from_anchor(v); }

    std::size_t ccw_next(std::size_t h) const { return ccw_next_[h]; }
    bool is_external(std::size_t p) const { return faces_[p].external; }

private:
    CellDecomposition cells_;
    std::vector<std::size_t> ccw_next_;
    std::vector<std::size_t> face_of_;
    std::vector<PlaquetteWalk> faces_;
    std::vector<SiteData> sites_;
};

// Validates the rotation system and traces the clockwise face walks.
std::vector<PlaquetteWalk> trace_faces(const CellDecomposition& cells);

// No looping edges and no face meeting an edge twice.
Report regularity_check(const Surface& s);

int half_edge_sign(const Surface& s, std::size_t v, std::size_t e);
int plaquette_edge_sign(const Surface& s, std::size_t p, std::size_t e);

// rows x cols square grid on the torus.
CellDecomposition grid_torus(std::size_t rows, std::size_t cols);
// Two vertices, four edges, two square faces on the torus.
CellDecomposition checkerboard_torus();
CellDecomposition tetrahedron();
// Two vertices joined by n parallel edges on the sphere; n >= 2 gives n digon faces.
CellDecomposition theta_sphere(std::size_t n);
// Two vertices joined by one edge on the sphere.
CellDecomposition segment_sphere();
// One vertex with one loop on the sphere.
CellDecomposition single_loop_sphere();
// Reverses every rotation and every edge.
CellDecomposition mirror(const CellDecomposition& cells);

}  // namespace kitaev
