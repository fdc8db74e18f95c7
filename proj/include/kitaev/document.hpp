#pragma once

#include "kitaev/labeling.hpp"

#include <json.hpp>

#include <filesystem>
#include <map>
#include <optional>

namespace kitaev {

struct ModelOptions {
    std::optional<std::uint64_t> max_dim;
    std::uint64_t seed = 0;
    bool flip_plaquette_sign = false;
};

// A vertex module choice: vacuum, regular, or explicit matrices.
struct VertexSpec {
    std::string kind = "vacuum";
    std::size_t dim = 0;
    std::vector<std::vector<SparseMatrix>> site_actions;
    std::vector<std::vector<SparseMatrix>> edge_actions;
};

struct ModelDocument {
    std::string name;
    std::map<std::string, HopfPtr> hopf_algebras;
    std::map<std::string, BicomodulePtr> bicomodules;
    LabeledSurface labels;  // vertex labels stay empty until assign_modules
    std::vector<VertexSpec> vertices;
    ModelOptions options;
};

// Schema errors and unresolved references throw InputError; errors raised while building
// the surface keep their own kind.
ModelDocument parse_document(const nlohmann::json& j);
ModelDocument load_document(const std::filesystem::path& path);

// Builds the vertex modules. Throws if a vertex algebra cannot be formed.
void assign_modules(ModelDocument& doc);

// Named Hopf and bicomodule algebras, then, if those are clean, labels and vertex modules.
Report validate_document(ModelDocument& doc);

// Guard precedence: explicit value, KITAEV_MAX_DIM, document option, 2^20.
std::uint64_t effective_max_dim(const ModelDocument& doc, std::optional<std::uint64_t> explicit_max);

nlohmann::json report_to_json(const Report& r);
// "num/den" or an integer; JSON numbers are accepted only when integral.
Rational rational_from_json(const nlohmann::json& j);

}  // namespace kitaev
