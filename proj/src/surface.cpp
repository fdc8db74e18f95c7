#include "kitaev/surface.hpp"

#include "kitaev/error.hpp"

#include <algorithm>
#include <set>

namespace kitaev {

namespace {

std::vector<std::size_t> validated_ccw_next(const CellDecomposition& c) {
    if (c.rotations.size() != c.num_vertices) {
        throw Error(ErrorKind::MalformedRotation, "expected one rotation per vertex");
    }
    for (std::size_t e = 0; e < c.edges.size(); ++e) {
        if (c.edges[e].source >= c.num_vertices || c.edges[e].target >= c.num_vertices) {
            throw Error(ErrorKind::MalformedRotation, "edge " + std::to_string(e) + " has an unknown endpoint");
        }
    }
    std::size_t nh = c.num_half_edges();
    std::vector<std::size_t> next(nh, nh);
    for (std::size_t v = 0; v < c.num_vertices; ++v) {
        const auto& r = c.rotations[v];
        for (std::size_t i = 0; i < r.size(); ++i) {
            std::size_t h = r[i];
            if (h >= nh) throw Error(ErrorKind::MalformedRotation, "unknown half-edge " + std::to_string(h));
            if (c.vertex_of(h) != v) {
                throw Error(ErrorKind::MalformedRotation,
                            "half-edge " + std::to_string(h) + " listed at vertex " + std::to_string(v));
            }
            if (next[h] != nh) throw Error(ErrorKind::MalformedRotation, "half-edge " + std::to_string(h) + " repeated");
            next[h] = r[(i + 1) % r.size()];
        }
    }
    for (std::size_t h = 0; h < nh; ++h) {
        if (next[h] == nh) throw Error(ErrorKind::MalformedRotation, "half-edge " + std::to_string(h) + " missing");
    }
    for (auto h : c.external_half_edges) {
        if (h >= nh) throw Error(ErrorKind::MalformedRotation, "unknown external half-edge " + std::to_string(h));
    }
    return next;
}

}  // namespace

std::vector<PlaquetteWalk> trace_faces(const CellDecomposition& cells) {
    std::vector<std::size_t> next = validated_ccw_next(cells);
    std::size_t nh = cells.num_half_edges();
    std::vector<bool> seen(nh, false);
    std::set<std::size_t> external(cells.external_half_edges.begin(), cells.external_half_edges.end());
    std::vector<PlaquetteWalk> faces;
    for (std::size_t start = 0; start < nh; ++start) {
        if (seen[start]) continue;
        std::vector<std::size_t> darts;
        for (std::size_t d = start; !seen[d]; d = next[twin(d)]) {
            seen[d] = true;
            darts.push_back(d);
        }
        PlaquetteWalk w;
        w.plaquette = faces.size();
        std::size_t m = darts.size();
        for (std::size_t i = 0; i < m; ++i) {
            std::size_t d = darts[i];
            w.boundary.push_back({twin(darts[(i + m - 1) % m]), edge_of(d), d % 2 ? -1 : 1});
            if (external.count(d)) w.external = true;
        }
        faces.push_back(std::move(w));
    }
    return faces;
}

Surface::Surface(CellDecomposition cells) : cells_(std::move(cells)) {
    ccw_next_ = validated_ccw_next(cells_);
    faces_ = trace_faces(cells_);
    std::size_t nh = cells_.num_half_edges();
    face_of_.assign(nh, 0);
    sites_.resize(nh);
    for (const auto& f : faces_) {
        for (const auto& st : f.boundary) {
            std::size_t out = ccw_next_[st.site];
            face_of_[out] = f.plaquette;
            sites_[st.site] = SiteData{cells_.vertex_of(st.site), f.plaquette, out, st.site};
        }
    }
}

long Surface::euler_characteristic() const {
    return static_cast<long>(num_vertices()) - static_cast<long>(num_edges()) + static_cast<long>(num_faces());
}

std::vector<std::size_t> Surface::clockwise_from_anchor(std::size_t v) const {
    const auto& r = cells_.rotations.at(v);
    if (r.empty()) return {};
    std::size_t n = r.size();
    std::size_t i0 = static_cast<std::size_t>(std::min_element(r.begin(), r.end()) - r.begin());
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < n; ++k) out.push_back(r[(i0 + n - k) % n]);
    return out;
}

Report regularity_check(const Surface& s) {
    Report r;
    std::string loops;
    for (std::size_t e = 0; e < s.num_edges(); ++e) {
        if (s.cells().edges[e].source == s.cells().edges[e].target) loops += (loops.empty() ? "" : ",") + std::to_string(e);
    }
    r.add("no looping edges", loops.empty(), loops.empty() ? "" : "edges " + loops);
    std::string repeated;
    for (const auto& f : s.faces()) {
        std::set<std::size_t> edges;
        for (const auto& st : f.boundary) {
            if (!edges.insert(st.edge).second) {
                repeated += (repeated.empty() ? "" : "; ") + std::string("face ") + std::to_string(f.plaquette) +
                            " edge " + std::to_string(st.edge);
                break;
            }
        }
    }
    r.add("no face meets an edge twice", repeated.empty(), repeated);
    return r;
}

int half_edge_sign(const Surface& s, std::size_t v, std::size_t e) {
    if (e >= s.num_edges()) throw Error(ErrorKind::NotIncident, "unknown edge " + std::to_string(e));
    const Edge& ed = s.cells().edges[e];
    if (ed.source == v) return 1;
    if (ed.target == v) return -1;
    throw Error(ErrorKind::NotIncident, "edge " + std::to_string(e) + " does not meet vertex " + std::to_string(v));
}

int plaquette_edge_sign(const Surface& s, std::size_t p, std::size_t e) {
    if (p >= s.num_faces()) throw Error(ErrorKind::NotIncident, "unknown face " + std::to_string(p));
    for (const auto& st : s.face(p).boundary) {
        if (st.edge == e) return st.sign;
    }
    throw Error(ErrorKind::NotIncident, "edge " + std::to_string(e) + " does not bound face " + std::to_string(p));
}

CellDecomposition grid_torus(std::size_t rows, std::size_t cols) {
    CellDecomposition c;
    c.num_vertices = rows * cols;
    c.edges.resize(2 * rows * cols);
    auto v = [&](std::size_t r, std::size_t col) { return (r % rows) * cols + col % cols; };
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t col = 0; col < cols; ++col) {
            c.edges[2 * v(r, col)] = {v(r, col), v(r, col + 1)};
            c.edges[2 * v(r, col) + 1] = {v(r, col), v(r + 1, col)};
        }
    }
    c.rotations.resize(c.num_vertices);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t col = 0; col < cols; ++col) {
            std::size_t east = half_edge(2 * v(r, col), false);
            std::size_t north = half_edge(2 * v(r, col) + 1, false);
            std::size_t west = half_edge(2 * v(r, col + cols - 1), true);
            std::size_t south = half_edge(2 * v(r + rows - 1, col) + 1, true);
            c.rotations[v(r, col)] = {east, north, west, south};
        }
    }
    return c;
}

CellDecomposition checkerboard_torus() {
    CellDecomposition c;
    c.num_vertices = 2;
    c.edges = {{0, 1}, {1, 0}, {0, 1}, {1, 0}};
    c.rotations = {{0, 4, 3, 7}, {2, 6, 1, 5}};
    return c;
}

CellDecomposition tetrahedron() {
    CellDecomposition c;
    c.num_vertices = 4;
    c.edges = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    c.rotations = {{0, 4, 2}, {6, 8, 1}, {3, 10, 7}, {5, 9, 11}};
    return c;
}

CellDecomposition theta_sphere(std::size_t n) {
    CellDecomposition c;
    c.num_vertices = 2;
    c.rotations.resize(2);
    for (std::size_t e = 0; e < n; ++e) {
        c.edges.push_back({0, 1});
        c.rotations[0].push_back(half_edge(n - 1 - e, false));
        c.rotations[1].push_back(half_edge(e, true));
    }
    return c;
}

CellDecomposition segment_sphere() {
    CellDecomposition c;
    c.num_vertices = 2;
    c.edges = {{0, 1}};
    c.rotations = {{0}, {1}};
    return c;
}

CellDecomposition single_loop_sphere() {
    CellDecomposition c;
    c.num_vertices = 1;
    c.edges = {{0, 0}};
    c.rotations = {{0, 1}};
    return c;
}

CellDecomposition mirror(const CellDecomposition& cells) {
    CellDecomposition m = cells;
    for (auto& e : m.edges) std::swap(e.source, e.target);
    for (auto& r : m.rotations) {
        std::reverse(r.begin(), r.end());
        for (auto& h : r) h = twin(h);
    }
    // A face departed into by h keeps being departed into by the half-edge now numbered h.
    return m;
}

}  // namespace kitaev
