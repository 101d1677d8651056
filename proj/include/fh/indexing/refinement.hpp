#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "fh/manifold/morphism.hpp"

namespace fh::indexing {

/// One factor of D(M) ≃ ∏ D(Bl(M)_i). A Point factor is an isolated
/// vertex, a Simplex factor an edge (with the vertices its ends are glued
/// to), a Paracyclic factor a circle.
struct RefinementFactor {
    enum class Kind { point, simplex, paracyclic };
    Kind kind = Kind::point;
    std::string name;
    int vertex = -1; // point
    int src = -1;    // simplex
    int dst = -1;    // simplex
};

struct RefinementCategoryDescriptor {
    manifold::GraphManifold manifold;
    std::vector<RefinementFactor> factors;

    /// Objects of D(M) are one level per non-point factor: an edge at level
    /// k is cut into k+1 pieces and a circle at level k carries k+1 points.
    std::size_t level_count() const;
    /// A terminal object exists iff there are no circles; it is all zeros.
    bool has_terminal() const;
};

RefinementCategoryDescriptor disk_refinement_category(const manifold::GraphManifold& m);

/// The disk-refinement of M at the given levels, with its refinement
/// morphism onto M. Throws std::invalid_argument on a wrong level count.
manifold::StratMorphism realize_refinement(const RefinementCategoryDescriptor& d, const std::vector<int>& levels);

/// The manifold at the terminal object. Throws std::domain_error when M has
/// circles.
manifold::GraphManifold terminal_reconstruction(const RefinementCategoryDescriptor& d);

nlohmann::json to_json(const RefinementCategoryDescriptor& d);

} // namespace fh::indexing
