#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "fh/util/report.hpp"

namespace fh::manifold {

/// A compact stratified 1-manifold: a finite directed multigraph (vertices
/// are the 0-stratum, edges the oriented 1-strata) plus smooth circles.
struct GraphManifold {
    struct Edge {
        std::string id;
        int src = 0;
        int dst = 0;

        friend bool operator==(const Edge&, const Edge&) = default;
    };
    std::vector<std::string> vertices;
    std::vector<Edge> edges;
    int circles = 0;

    int vertex_count() const { return static_cast<int>(vertices.size()); }
    int edge_count() const { return static_cast<int>(edges.size()); }
    bool disk_stratified() const { return circles == 0; }

    friend bool operator==(const GraphManifold&, const GraphManifold&) = default;
};

/// Dangling endpoints, duplicate ids and negative circle counts.
ValidationReport validate_manifold(const GraphManifold& m);

GraphManifold point();          // D⁰
GraphManifold interval();       // D¹
GraphManifold pointed_circle(); // S¹_*: one vertex, one loop
GraphManifold circle();         // S¹
/// ⟨n⟩: vertices 0..n, edges i -> i+1.
GraphManifold chain(int n);
/// n vertices arranged on an oriented cycle (S¹ with n marked points).
GraphManifold marked_circle(int n);
GraphManifold disjoint_union(const GraphManifold& a, const GraphManifold& b);

/// Throws SchemaError.
GraphManifold manifold_from_json(const nlohmann::json& doc);
nlohmann::json to_json(const GraphManifold& m);

} // namespace fh::manifold
