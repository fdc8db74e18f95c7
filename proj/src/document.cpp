#include "kitaev/document.hpp"

#include "kitaev/error.hpp"
#include "kitaev/lattice.hpp"

#include <cstdlib>
#include <fstream>
#include <set>

namespace kitaev {

using nlohmann::json;

namespace {

[[noreturn]] void input_error(const std::string& what) { throw Error(ErrorKind::InputError, what); }

std::size_t index_in(const json& j, std::size_t bound, const std::string& what) {
    if (!j.is_number_unsigned()) input_error(what + ": expected a non-negative integer");
    auto i = j.get<std::size_t>();
    if (i >= bound) input_error(what + ": index " + std::to_string(i) + " out of range");
    return i;
}

Vec rational_vec(const json& j, std::size_t n, const std::string& what) {
    if (!j.is_array() || j.size() != n) input_error(what + ": expected " + std::to_string(n) + " rationals");
    Vec v;
    for (const auto& x : j) v.push_back(rational_from_json(x));
    return v;
}

// [[row, col, "c"], ...]
SparseMatrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols, const std::string& what) {
    if (!j.is_array()) input_error(what + ": expected a list of [row, col, value] entries");
    std::vector<Triplet> t;
    for (const auto& e : j) {
        if (!e.is_array() || e.size() != 3) input_error(what + ": expected [row, col, value]");
        t.push_back({index_in(e[0], rows, what), index_in(e[1], cols, what), rational_from_json(e[2])});
    }
    return SparseMatrix::from_triplets(rows, cols, t);
}

std::vector<std::string> string_list(const json& j, const std::string& what) {
    if (!j.is_array()) input_error(what + ": expected a list of strings");
    std::vector<std::string> out;
    for (const auto& x : j) {
        if (!x.is_string()) input_error(what + ": expected a list of strings");
        out.push_back(x.get<std::string>());
    }
    return out;
}

// [[i, j, k, "c"], ...]: b_i * b_j has coefficient c on b_k.
AlgebraData algebra_from_json(const json& j, const std::string& what) {
    std::vector<std::string> basis = string_list(j.at("basis"), what + ".basis");
    std::size_t n = basis.size();
    std::vector<SparseAccumulator> acc(n * n);
    for (const auto& e : j.at("products")) {
        if (!e.is_array() || e.size() != 4) input_error(what + ".products: expected [i, j, k, value]");
        std::size_t a = index_in(e[0], n, what), b = index_in(e[1], n, what), c = index_in(e[2], n, what);
        acc[a * n + b].add(c, rational_from_json(e[3]));
    }
    std::vector<SparseVec> products;
    for (auto& a : acc) products.push_back(a.finish());
    return make_algebra(n, std::move(basis), std::move(products), rational_vec(j.at("unit"), n, what + ".unit"));
}

GroupTable group_from_name(const std::string& name) {
    if (name == "Z2xZ2") return klein_four_group();
    if (name == "S3") return symmetric_group_3();
    if (name.size() > 1 && name[0] == 'Z' && name.find_first_not_of("0123456789", 1) == std::string::npos) {
        unsigned long n = std::stoul(name.substr(1));
        if (n >= 1 && n <= 64) return cyclic_group(n);
    }
    input_error("unknown group '" + name + "' (expected Z<n>, Z2xZ2 or S3)");
}

class Resolver {
public:
    explicit Resolver(const json& root) : root_(root) {}

    HopfPtr hopf(const std::string& name) {
        if (auto it = hopf_.find(name); it != hopf_.end()) return it->second;
        const json* defs = root_.contains("hopf_algebras") ? &root_.at("hopf_algebras") : nullptr;
        if (!defs || !defs->contains(name)) input_error("unknown Hopf algebra '" + name + "'");
        if (!visiting_.insert("H:" + name).second) input_error("cyclic definition of '" + name + "'");
        HopfPtr h = std::make_shared<const HopfAlgebraData>(build_hopf(defs->at(name), "hopf_algebras." + name));
        visiting_.erase("H:" + name);
        hopf_[name] = h;
        return h;
    }

    BicomodulePtr bicomodule(const std::string& name) {
        if (auto it = bicomodules_.find(name); it != bicomodules_.end()) return it->second;
        const json* defs = root_.contains("bicomodules") ? &root_.at("bicomodules") : nullptr;
        if (!defs || !defs->contains(name)) input_error("unknown bicomodule algebra '" + name + "'");
        if (!visiting_.insert("K:" + name).second) input_error("cyclic definition of '" + name + "'");
        auto k = std::make_shared<const BicomoduleAlgebraData>(build_bicomodule(defs->at(name), "bicomodules." + name));
        visiting_.erase("K:" + name);
        bicomodules_[name] = k;
        return k;
    }

    std::map<std::string, HopfPtr> all_hopf() {
        if (root_.contains("hopf_algebras")) {
            for (const auto& [name, def] : root_.at("hopf_algebras").items()) hopf(name);
        }
        return hopf_;
    }

    std::map<std::string, BicomodulePtr> all_bicomodules() {
        if (root_.contains("bicomodules")) {
            for (const auto& [name, def] : root_.at("bicomodules").items()) bicomodule(name);
        }
        return bicomodules_;
    }

private:
    HopfAlgebraData build_hopf(const json& d, const std::string& what) {
        if (!d.is_object()) input_error(what + ": expected an object");
        if (d.contains("group")) return group_algebra(group_from_name(d.at("group").get<std::string>()));
        if (d.contains("dual")) return dual_hopf(*hopf(d.at("dual").get<std::string>()));
        if (d.contains("op_cop")) return op_cop(*hopf(d.at("op_cop").get<std::string>()));
        if (d.contains("cop")) return cop(*hopf(d.at("cop").get<std::string>()));
        if (d.contains("tensor")) {
            auto names = string_list(d.at("tensor"), what + ".tensor");
            if (names.size() != 2) input_error(what + ".tensor: expected two names");
            return tensor_hopf(*hopf(names[0]), *hopf(names[1]));
        }
        if (d.contains("trivial")) return trivial_hopf();
        if (d.contains("basis")) {
            AlgebraData a = algebra_from_json(d, what);
            std::size_t n = a.dim;
            std::vector<SparseAccumulator> acc(n);
            for (const auto& e : d.at("comult")) {
                if (!e.is_array() || e.size() != 4) input_error(what + ".comult: expected [i, j, k, value]");
                std::size_t i = index_in(e[0], n, what), x = index_in(e[1], n, what), y = index_in(e[2], n, what);
                acc[i].add(x * n + y, rational_from_json(e[3]));
            }
            std::vector<SparseVec> comult;
            for (auto& c : acc) comult.push_back(c.finish());
            // [[i, j, "c"], ...]: S(b_i) has coefficient c on b_j.
            SparseMatrix s = matrix_from_json(d.at("antipode"), n, n, what + ".antipode").transpose();
            return make_hopf(std::move(a), std::move(comult), rational_vec(d.at("counit"), n, what + ".counit"),
                             std::move(s));
        }
        input_error(what + ": expected one of group, dual, op_cop, cop, tensor, trivial or explicit basis");
    }

    BicomoduleAlgebraData build_bicomodule(const json& d, const std::string& what) {
        if (!d.is_object()) input_error(what + ": expected an object");
        if (d.contains("regular")) return regular_bicomodule(hopf(d.at("regular").get<std::string>()));
        if (d.contains("trivial")) {
            auto names = string_list(d.at("trivial"), what + ".trivial");
            if (names.size() != 2) input_error(what + ".trivial: expected [left, right]");
            return trivial_bicomodule(hopf(names[0]), hopf(names[1]));
        }
        if (d.contains("one_sided")) {
            std::string side = d.value("side", "left");
            if (side != "left" && side != "right") input_error(what + ".side: expected left or right");
            return one_sided_regular(hopf(d.at("one_sided").get<std::string>()), side == "left");
        }
        if (d.contains("opposite")) return opposite_bicomodule(*bicomodule(d.at("opposite").get<std::string>()));
        if (d.contains("twisted_subgroup")) {
            const json& t = d.at("twisted_subgroup");
            GroupTable g = group_from_name(t.at("group").get<std::string>());
            HopfPtr kg = hopf(t.at("hopf").get<std::string>());
            std::vector<std::size_t> sub;
            for (const auto& label : string_list(t.at("subgroup"), what + ".subgroup")) sub.push_back(g.index_of(label));
            Cocycle zeta;
            if (t.contains("cocycle")) {
                const json& c = t.at("cocycle");
                if (c.is_string() && c.get<std::string>() == "klein_sign") {
                    zeta = klein_sign_cocycle();
                } else if (c.is_array()) {
                    for (const auto& e : c) {
                        if (!e.is_array() || e.size() != 3) input_error(what + ".cocycle: expected [u, v, sign]");
                        zeta[{g.index_of(e[0].get<std::string>()), g.index_of(e[1].get<std::string>())}] =
                            e[2].get<int>();
                    }
                } else {
                    input_error(what + ".cocycle: expected \"klein_sign\" or a list of [u, v, sign]");
                }
            }
            return twisted_subgroup_algebra(g, kg, sub, zeta);
        }
        if (d.contains("basis")) {
            AlgebraData a = algebra_from_json(d, what);
            HopfPtr left = hopf(d.at("left").get<std::string>());
            HopfPtr right = hopf(d.at("right").get<std::string>());
            std::size_t n = a.dim, nl = left->dim(), nr = right->dim();
            std::vector<SparseAccumulator> acc(n);
            // [[k, a, m, b, "c"], ...]: the coaction of b_k has coefficient c on a (x) b_m (x) b.
            for (const auto& e : d.at("coaction")) {
                if (!e.is_array() || e.size() != 5) input_error(what + ".coaction: expected [k, left, middle, right, value]");
                std::size_t k = index_in(e[0], n, what), l = index_in(e[1], nl, what);
                std::size_t m = index_in(e[2], n, what), r = index_in(e[3], nr, what);
                acc[k].add((l * n + m) * nr + r, rational_from_json(e[4]));
            }
            std::vector<SparseVec> coaction;
            for (auto& c : acc) coaction.push_back(c.finish());
            return BicomoduleAlgebraData{std::move(a), left, right, std::move(coaction)};
        }
        input_error(what + ": expected one of regular, trivial, one_sided, opposite, twisted_subgroup or explicit basis");
    }

    const json& root_;
    std::map<std::string, HopfPtr> hopf_;
    std::map<std::string, BicomodulePtr> bicomodules_;
    std::set<std::string> visiting_;
};

CellDecomposition surface_from_json(const json& j) {
    CellDecomposition cells;
    if (j.contains("builder")) {
        std::string b = j.at("builder").get<std::string>();
        if (b == "grid_torus") {
            cells = grid_torus(j.at("rows").get<std::size_t>(), j.at("cols").get<std::size_t>());
        } else if (b == "checkerboard_torus") {
            cells = checkerboard_torus();
        } else if (b == "tetrahedron") {
            cells = tetrahedron();
        } else if (b == "theta_sphere") {
            cells = theta_sphere(j.at("n").get<std::size_t>());
        } else if (b == "segment_sphere") {
            cells = segment_sphere();
        } else if (b == "single_loop_sphere") {
            cells = single_loop_sphere();
        } else {
            input_error("unknown surface builder '" + b + "'");
        }
    } else {
        cells.num_vertices = j.at("vertices").get<std::size_t>();
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2) input_error("surface.edges: expected [source, target]");
            cells.edges.push_back({index_in(e[0], cells.num_vertices, "surface.edges"),
                                   index_in(e[1], cells.num_vertices, "surface.edges")});
        }
        for (const auto& r : j.at("rotations")) {
            std::vector<std::size_t> rot;
            for (const auto& h : r) rot.push_back(index_in(h, cells.num_half_edges(), "surface.rotations"));
            cells.rotations.push_back(std::move(rot));
        }
    }
    if (j.contains("external_half_edges")) {
        for (const auto& h : j.at("external_half_edges")) {
            cells.external_half_edges.push_back(index_in(h, cells.num_half_edges(), "surface.external_half_edges"));
        }
    }
    if (j.contains("external_faces")) {
        // Face ids refer to the faces traced without any boundary marked.
        CellDecomposition closed = cells;
        closed.external_half_edges.clear();
        Surface traced(closed);
        std::set<std::size_t> faces;
        for (const auto& p : j.at("external_faces")) faces.insert(index_in(p, traced.num_faces(), "surface.external_faces"));
        for (std::size_t h = 0; h < cells.num_half_edges(); ++h) {
            if (faces.count(traced.face_of(h))) cells.external_half_edges.push_back(h);
        }
    }
    if (j.value("mirror", false)) cells = mirror(cells);
    return cells;
}

// {"default": name, "<id>": name, ...} applied to a label vector.
template <typename Ptr, typename Lookup>
void apply_labels(const json& j, std::vector<Ptr>& labels, Lookup lookup, const std::string& what) {
    if (j.is_string()) {
        Ptr p = lookup(j.template get<std::string>());
        for (auto& l : labels) l = p;
        return;
    }
    if (!j.is_object()) input_error(what + ": expected a name or an object of overrides");
    if (j.contains("default")) {
        Ptr p = lookup(j.at("default").template get<std::string>());
        for (auto& l : labels) l = p;
    }
    for (const auto& [key, val] : j.items()) {
        if (key == "default") continue;
        std::size_t id = 0;
        try {
            id = std::stoul(key);
        } catch (const std::exception&) {
            input_error(what + ": '" + key + "' is not an id");
        }
        if (id >= labels.size()) input_error(what + ": id " + key + " out of range");
        labels[id] = lookup(val.template get<std::string>());
    }
}

std::vector<std::vector<SparseMatrix>> action_list(const json& j, std::size_t dim, const std::string& what) {
    std::vector<std::vector<SparseMatrix>> out;
    for (const auto& factor : j) {
        std::vector<SparseMatrix> mats;
        for (const auto& m : factor) mats.push_back(matrix_from_json(m, dim, dim, what));
        out.push_back(std::move(mats));
    }
    return out;
}

VertexSpec vertex_spec(const json& j, const std::string& what) {
    VertexSpec v;
    if (j.is_string()) {
        v.kind = j.get<std::string>();
        if (v.kind != "vacuum" && v.kind != "regular") input_error(what + ": expected vacuum, regular or explicit matrices");
        return v;
    }
    v.kind = "explicit";
    v.dim = j.at("dim").get<std::size_t>();
    v.site_actions = action_list(j.at("site_actions"), v.dim, what + ".site_actions");
    v.edge_actions = action_list(j.at("edge_actions"), v.dim, what + ".edge_actions");
    return v;
}

ModelDocument parse_impl(const json& j) {
    if (!j.is_object()) input_error("document must be a JSON object");
    ModelDocument doc;
    doc.name = j.value("name", "");
    Resolver resolve(j);
    doc.hopf_algebras = resolve.all_hopf();
    doc.bicomodules = resolve.all_bicomodules();

    auto cells = surface_from_json(j.at("surface"));
    const json& lab = j.at("labels");
    if (lab.contains("transparent")) {
        doc.labels = transparent_labeling(cells, resolve.hopf(lab.at("transparent").get<std::string>()));
    } else {
        doc.labels.surface = std::make_shared<const Surface>(cells);
        doc.labels.plaquette_labels.resize(doc.labels.surface->num_faces());
        doc.labels.edge_labels.resize(doc.labels.surface->num_edges());
    }
    const Surface& sf = *doc.labels.surface;
    if (lab.contains("faces")) {
        apply_labels(lab.at("faces"), doc.labels.plaquette_labels, [&](const std::string& n) { return resolve.hopf(n); },
                     "labels.faces");
    }
    if (lab.contains("edges")) {
        apply_labels(lab.at("edges"), doc.labels.edge_labels,
                     [&](const std::string& n) { return resolve.bicomodule(n); }, "labels.edges");
    }
    doc.vertices.assign(sf.num_vertices(), VertexSpec{});
    if (lab.contains("vertices")) {
        const json& v = lab.at("vertices");
        if (v.is_string()) {
            doc.vertices.assign(sf.num_vertices(), vertex_spec(v, "labels.vertices"));
        } else {
            if (v.contains("default")) doc.vertices.assign(sf.num_vertices(), vertex_spec(v.at("default"), "labels.vertices"));
            for (const auto& [key, val] : v.items()) {
                if (key == "default") continue;
                std::size_t id = std::stoul(key);
                if (id >= sf.num_vertices()) input_error("labels.vertices: id " + key + " out of range");
                doc.vertices[id] = vertex_spec(val, "labels.vertices." + key);
            }
        }
    }
    // References made only from the labels are listed too.
    doc.hopf_algebras = resolve.all_hopf();
    doc.bicomodules = resolve.all_bicomodules();

    if (j.contains("options")) {
        const json& o = j.at("options");
        if (o.contains("max_dim")) doc.options.max_dim = o.at("max_dim").get<std::uint64_t>();
        doc.options.seed = o.value("seed", std::uint64_t{0});
        doc.options.flip_plaquette_sign = o.value("flip_plaquette_sign", false);
    }
    return doc;
}

}  // namespace

Rational rational_from_json(const json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
    input_error("expected a rational as \"num/den\" or an integer, got " + j.dump());
}

ModelDocument parse_document(const json& j) {
    try {
        return parse_impl(j);
    } catch (const json::exception& e) {
        input_error(std::string("schema error: ") + e.what());
    } catch (const std::invalid_argument& e) {
        input_error(std::string("schema error: ") + e.what());
    }
}

ModelDocument load_document(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) input_error("cannot read " + path.string());
    json j;
    try {
        j = json::parse(in);
    } catch (const json::exception& e) {
        input_error(path.string() + ": " + e.what());
    }
    return parse_document(j);
}

void assign_modules(ModelDocument& doc) {
    LabeledSurface& s = doc.labels;
    const Surface& sf = *s.surface;
    s.vertex_labels.assign(sf.num_vertices(), nullptr);
    for (std::size_t v = 0; v < sf.num_vertices(); ++v) {
        VertexAlgebraPtr cv = vertex_algebra(s, v);
        const VertexSpec& spec = doc.vertices[v];
        VertexModule m;
        if (spec.kind == "vacuum") {
            m = vacuum_module(*cv);
        } else if (spec.kind == "regular") {
            m = regular_module(*cv);
        } else {
            m = explicit_module(*cv, spec.dim, spec.site_actions, spec.edge_actions);
        }
        s.vertex_labels[v] = std::make_shared<const VertexModule>(std::move(m));
    }
}

Report validate_document(ModelDocument& doc) {
    Report r;
    for (const auto& [name, h] : doc.hopf_algebras) r.merge(validate_hopf(*h), "hopf " + name);
    for (const auto& [name, k] : doc.bicomodules) r.merge(validate_bicomodule(*k), "bicomodule " + name);
    if (!r.ok()) return r;
    const LabeledSurface& s = doc.labels;
    const Surface& sf = *s.surface;
    if (!regularity_check(sf).ok()) r.warn("surface is not regular; commutation checks will be skipped");
    // Side mismatches are reported before the vertex algebras, which cannot be formed over them.
    std::string sides;
    for (std::size_t e = 0; e < sf.num_edges(); ++e) {
        const auto& k = s.edge_labels[e];
        if (!k || !s.plaquette_labels[sf.left_face(e)] || !s.plaquette_labels[sf.right_face(e)]) continue;
        if (!same_hopf(k->left_hopf, s.plaquette_labels[sf.left_face(e)]) ||
            !same_hopf(k->right_hopf, s.plaquette_labels[sf.right_face(e)])) {
            sides += (sides.empty() ? "edge " : ", edge ") + std::to_string(e);
        }
    }
    if (!sides.empty()) {
        r.fail("edge labels match adjacent faces", sides);
        return r;
    }
    try {
        assign_modules(doc);
    } catch (const Error& e) {
        r.fail("vertex modules", e.what());
        return r;
    }
    r.merge(validate_labeling(doc.labels));
    return r;
}

std::uint64_t effective_max_dim(const ModelDocument& doc, std::optional<std::uint64_t> explicit_max) {
    if (explicit_max) return *explicit_max;
    if (std::getenv("KITAEV_MAX_DIM") || !doc.options.max_dim) return default_max_dim();
    return *doc.options.max_dim;
}

json report_to_json(const Report& r) {
    json checks = json::array();
    for (const auto& c : r.checks()) {
        json o{{"name", c.name}, {"passed", c.passed}};
        if (!c.detail.empty()) o["detail"] = c.detail;
        checks.push_back(std::move(o));
    }
    return json{{"checks", checks}, {"warnings", r.warnings()}, {"violations", r.failures()}};
}

}  // namespace kitaev
