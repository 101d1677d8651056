#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "fh/enrich/backend.hpp"
#include "fh/enrich/category.hpp"
#include "fh/fincat/set_diagram.hpp"
#include "fh/fincat/simplicial.hpp"
#include "fh/manifold/graph.hpp"

namespace fh::facthom {

/// Entering paths of a disk-stratified R: objects "v:<vertex>" for every
/// vertex followed by "e:<edge>" for every edge, and arrows
/// "e:<edge>.src" and "e:<edge>.dst" from an edge to its endpoints (two
/// parallel arrows for a loop). Throws std::domain_error when R has circles.
fincat::FinCategory enter_category(const manifold::GraphManifold& r);

/// Y restricted to entering paths: vertices go to Y_0, edges to Y_1, the
/// source arrow to d_1 and the target arrow to d_0.
fincat::SetDiagram enter_diagram(const manifold::GraphManifold& r, const fincat::SimplicialSet& y);

/// The limit of Y over entering paths. Each family lists one Y_0 element per
/// vertex and then one Y_1 element per edge. With `require_segal`, a non-Segal
/// Y is rejected by std::invalid_argument.
fincat::Limit cart_facthom_disk(const manifold::GraphManifold& r, const fincat::SimplicialSet& y,
                                bool require_segal = false);

/// An object label per vertex and a morphism per edge, compatible with the
/// labels.
struct Labeling {
    std::vector<fincat::ObjectId> objects;
    std::vector<fincat::MorphismId> edges;
    friend auto operator<=>(const Labeling&, const Labeling&) = default;
};

/// Enriched factorization homology of a disk-stratified R in finite sets:
/// labelings modulo the action of the core groupoid at each vertex.
/// `elements` holds the least labeling of each orbit, `orbit_of` maps every
/// labeling in `all` to its orbit.
struct EnrFacthomSet {
    std::vector<Labeling> all;
    std::vector<std::size_t> orbit_of;
    std::vector<Labeling> elements;
    std::size_t size() const { return elements.size(); }
};

EnrFacthomSet enr_facthom_disk(const manifold::GraphManifold& r, const enrich::SetEnrichedCategory& c);

/// The linear counterpart: ⊕ over labelings λ of ⊗_e hom(λ s e, λ t e), as a
/// based module with basis labels "x,y|i,j" (vertex objects | edge basis).
enrich::BasedModule enr_facthom_disk(const manifold::GraphManifold& r, const enrich::LinearCategory& c);

/// Labeling ↦ limit family, the comparison map with the nerve route.
std::vector<std::size_t> labeling_to_family(const Labeling& l, const fincat::SimplicialSet& nerve_of_c,
                                            const enrich::SetEnrichedCategory& c);

} // namespace fh::facthom
