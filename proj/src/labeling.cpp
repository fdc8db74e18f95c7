#include "kitaev/labeling.hpp"

#include "kitaev/error.hpp"

namespace kitaev {

BicomoduleAlgebraData one_sided_regular(const HopfPtr& h, bool left) {
    auto triv = std::make_shared<const HopfAlgebraData>(trivial_hopf());
    std::size_t n = h->dim();
    BicomoduleAlgebraData k{h->algebra, left ? h : triv, left ? triv : h, {}};
    // With a one-dimensional trivial leg the flat index (a, k0, b) collapses onto that of Delta.
    for (std::size_t i = 0; i < n; ++i) k.coaction.push_back(h->coproduct(SparseVec{{i, Rational(1)}}));
    return k;
}

LabeledSurface transparent_labeling(const CellDecomposition& cells, const HopfPtr& h) {
    LabeledSurface s;
    s.surface = std::make_shared<const Surface>(cells);
    auto triv = std::make_shared<const HopfAlgebraData>(trivial_hopf());
    for (const auto& f : s.surface->faces()) s.plaquette_labels.push_back(f.external ? triv : h);
    auto reg = std::make_shared<const BicomoduleAlgebraData>(regular_bicomodule(h));
    for (std::size_t e = 0; e < s.surface->num_edges(); ++e) {
        bool lext = s.surface->is_external(s.surface->left_face(e));
        bool rext = s.surface->is_external(s.surface->right_face(e));
        if (lext && rext) {
            s.edge_labels.push_back(std::make_shared<const BicomoduleAlgebraData>(trivial_bicomodule(triv, triv)));
        } else if (lext || rext) {
            s.edge_labels.push_back(std::make_shared<const BicomoduleAlgebraData>(one_sided_regular(h, rext)));
        } else {
            s.edge_labels.push_back(reg);
        }
    }
    s.vertex_labels.resize(s.surface->num_vertices());
    return s;
}

VertexAlgebraPtr vertex_algebra(const LabeledSurface& s, std::size_t v) {
    const Surface& sf = *s.surface;
    if (s.plaquette_labels.size() != sf.num_faces() || s.edge_labels.size() != sf.num_edges()) {
        throw Error(ErrorKind::UnlabeledCell, "label counts do not match the surface");
    }
    std::vector<std::size_t> order = sf.clockwise_from_anchor(v);
    std::vector<std::size_t> position(sf.cells().num_half_edges(), order.size());
    for (std::size_t j = 0; j < order.size(); ++j) position[order[j]] = j;
    std::vector<VertexEdge> edges;
    for (std::size_t h : order) {
        const auto& k = s.edge_labels[edge_of(h)];
        if (!k) throw Error(ErrorKind::UnlabeledCell, "edge " + std::to_string(edge_of(h)) + " has no label");
        int sign = h % 2 ? -1 : 1;
        edges.push_back({sign > 0 ? k : std::make_shared<const BicomoduleAlgebraData>(opposite_bicomodule(*k)), sign, h});
    }
    std::vector<VertexSite> sites;
    for (std::size_t h : order) {
        const SiteData& sd = sf.site(h);
        const auto& hp = s.plaquette_labels[sd.plaquette];
        if (!hp) throw Error(ErrorKind::UnlabeledCell, "face " + std::to_string(sd.plaquette) + " has no label");
        VertexSite site;
        site.hopf = hp;
        site.right_factor = position[sd.right_half_edge];
        site.left_factor = position[sd.left_half_edge];
        site.site_id = h;
        site.plaquette = sd.plaquette;
        sites.push_back(site);
    }
    return std::make_shared<const VertexAlgebra>(v, std::move(sites), std::move(edges));
}

void assign_vertex_modules(LabeledSurface& s, ModuleChoice choice) {
    s.vertex_labels.resize(s.surface->num_vertices());
    for (std::size_t v = 0; v < s.surface->num_vertices(); ++v) {
        VertexAlgebraPtr cv = vertex_algebra(s, v);
        s.vertex_labels[v] = std::make_shared<const VertexModule>(choice == ModuleChoice::Vacuum ? vacuum_module(*cv)
                                                                                                : regular_module(*cv));
    }
}

Report validate_labeling(const LabeledSurface& s) {
    Report r;
    const Surface& sf = *s.surface;
    bool counts = s.plaquette_labels.size() == sf.num_faces() && s.edge_labels.size() == sf.num_edges() &&
                  s.vertex_labels.size() == sf.num_vertices();
    r.add("label counts", counts, counts ? "" : "one label per face, edge and vertex expected");
    if (!counts) return r;

    std::string missing;
    for (std::size_t p = 0; p < sf.num_faces(); ++p) {
        if (!s.plaquette_labels[p]) missing += " face " + std::to_string(p);
    }
    for (std::size_t e = 0; e < sf.num_edges(); ++e) {
        if (!s.edge_labels[e]) missing += " edge " + std::to_string(e);
    }
    for (std::size_t v = 0; v < sf.num_vertices(); ++v) {
        if (!s.vertex_labels[v]) missing += " vertex " + std::to_string(v);
    }
    r.add("all cells labeled", missing.empty(), missing.empty() ? "" : "missing:" + missing);
    if (!missing.empty()) return r;

    std::string ext;
    for (std::size_t p = 0; p < sf.num_faces(); ++p) {
        if (sf.is_external(p) && s.plaquette_labels[p]->dim() != 1) ext += " " + std::to_string(p);
    }
    r.add("external faces carry the trivial Hopf algebra", ext.empty(), ext.empty() ? "" : "faces" + ext);

    std::string sides;
    for (std::size_t e = 0; e < sf.num_edges(); ++e) {
        const auto& k = *s.edge_labels[e];
        bool ok = same_hopf(k.left_hopf, s.plaquette_labels[sf.left_face(e)]) &&
                  same_hopf(k.right_hopf, s.plaquette_labels[sf.right_face(e)]);
        if (!ok) sides += (sides.empty() ? "edge " : ", edge ") + std::to_string(e);
    }
    r.add("edge labels match adjacent faces", sides.empty(), sides);

    for (std::size_t e = 0; e < sf.num_edges(); ++e) {
        Report kr = validate_bicomodule(*s.edge_labels[e]);
        if (!kr.ok()) r.merge(kr, "edge " + std::to_string(e));
    }
    for (std::size_t p = 0; p < sf.num_faces(); ++p) {
        Report hr = validate_hopf(*s.plaquette_labels[p]);
        if (!hr.ok()) r.merge(hr, "face " + std::to_string(p));
    }
    if (!sides.empty()) return r;

    for (std::size_t v = 0; v < sf.num_vertices(); ++v) {
        VertexAlgebraPtr cv = vertex_algebra(s, v);
        r.merge(validate_vertex_module(*cv, *s.vertex_labels[v]), "vertex " + std::to_string(v));
    }
    return r;
}

}  // namespace kitaev
