#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "fh/manifold/graph.hpp"

namespace fh::manifold {

/// A target circle wrapping `degree` times around a source circle.
struct CircleCover {
    int circle = 0;
    int degree = 1;

    friend bool operator==(const CircleCover&, const CircleCover&) = default;
};

/// A target circle sent around a closed directed walk in the source graph,
/// or collapsed onto `base` when the walk is empty. Walks are compared up to
/// rotation.
struct ClosedWalk {
    int base = 0;
    std::vector<int> edges;

    friend bool operator==(const ClosedWalk&, const ClosedWalk&) = default;
};

using CircleImage = std::variant<CircleCover, ClosedWalk>;

/// A morphism M -> N in path form. The datum is contravariant: every target
/// vertex names a source vertex, every target edge a directed walk in the
/// source (empty when the edge collapses onto a vertex), every target circle
/// a cover of a source circle or a closed walk. Closed, creation and
/// refinement morphisms are the special cases singled out by classify.
struct StratMorphism {
    GraphManifold source;
    GraphManifold target;
    std::vector<int> vertex_map;
    std::vector<std::vector<int>> edge_paths;
    std::vector<CircleImage> circle_images;
};

enum class MorphismClass { isomorphism, closed, creation, refinement, closed_creation, active, general };

std::string to_string(MorphismClass c);

ValidationReport validate_morphism(const StratMorphism& m);

StratMorphism identity(const GraphManifold& m);

/// Most specific class. Isomorphisms are closed, creation and refinement at
/// once; creations are active and closed-creation.
MorphismClass classify_morphism(const StratMorphism& m);

bool is_closed(const StratMorphism& m);
bool is_creation(const StratMorphism& m);
bool is_refinement(const StratMorphism& m);
bool is_closed_creation(const StratMorphism& m);
bool is_active(const StratMorphism& m);

/// m2 ∘ m1. Throws std::invalid_argument when target(m1) != source(m2).
StratMorphism compose_morphisms(const StratMorphism& m1, const StratMorphism& m2);

/// Equality of the constituent data with closed walks taken up to rotation.
bool same_morphism(const StratMorphism& a, const StratMorphism& b);

/// m = active ∘ closed, through the substratum of cells that m visits.
std::pair<StratMorphism, StratMorphism> factor_closed_active(const StratMorphism& m);

/// An active morphism as refinement ∘ creation: the intermediate subdivides
/// each target edge into one piece per edge of its walk. Throws
/// std::domain_error for non-active input.
std::pair<StratMorphism, StratMorphism> factor_creation_refinement(const StratMorphism& m);

/// Total blowup: every edge becomes its own D¹, isolated vertices stay D⁰
/// components, circles are kept. Returns Bl(M) and the creation M -> Bl(M).
std::pair<GraphManifold, StratMorphism> blowup(const GraphManifold& m);

/// Throws SchemaError.
StratMorphism morphism_from_json(const nlohmann::json& doc);
nlohmann::json to_json(const StratMorphism& m);

} // namespace fh::manifold
