#pragma once

#include "kitaev/surface.hpp"
#include "kitaev/vertex.hpp"

namespace kitaev {

// Edge labels have their left leg on the face to the left of the edge and their right leg on the face to its right.
struct LabeledSurface {
    std::shared_ptr<const Surface> surface;
    std::vector<HopfPtr> plaquette_labels;
    std::vector<BicomodulePtr> edge_labels;
    std::vector<VertexModulePtr> vertex_labels;  // null until assigned
};

// H on every internal face, the trivial Hopf algebra on external ones, and the matching
// regular (or one-sided regular) label on every edge.
LabeledSurface transparent_labeling(const CellDecomposition& cells, const HopfPtr& h);

// H as a comodule algebra over H on one side and over the trivial Hopf algebra on the other.
BicomoduleAlgebraData one_sided_regular(const HopfPtr& h, bool left);

VertexAlgebraPtr vertex_algebra(const LabeledSurface& s, std::size_t v);

enum class ModuleChoice { Vacuum, Regular };
void assign_vertex_modules(LabeledSurface& s, ModuleChoice choice);

Report validate_labeling(const LabeledSurface& s);

}  // namespace kitaev
