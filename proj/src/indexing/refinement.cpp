#include "fh/indexing/refinement.hpp"

#include <stdexcept>

namespace fh::indexing {

std::size_t RefinementCategoryDescriptor::level_count() const
{
    std::size_t count = 0;
    for (const auto& f : factors)
        count += f.kind != RefinementFactor::Kind::point;
    return count;
}

bool RefinementCategoryDescriptor::has_terminal() const
{
    for (const auto& f : factors) {
        if (f.kind == RefinementFactor::Kind::paracyclic)
            return false;
    }
    return true;
}

RefinementCategoryDescriptor disk_refinement_category(const manifold::GraphManifold& m)
{
    RefinementCategoryDescriptor d{m, {}};
    std::vector<bool> incident(m.vertex_count());
    for (const auto& e : m.edges) {
        incident[e.src] = incident[e.dst] = true;
        d.factors.push_back({RefinementFactor::Kind::simplex, e.id, -1, e.src, e.dst});
    }
    for (int v = 0; v < m.vertex_count(); ++v) {
        if (!incident[v])
            d.factors.push_back({RefinementFactor::Kind::point, m.vertices[v], v, -1, -1});
    }
    for (int c = 0; c < m.circles; ++c)
        d.factors.push_back({RefinementFactor::Kind::paracyclic, "c" + std::to_string(c), -1, -1, -1});
    return d;
}

manifold::StratMorphism realize_refinement(const RefinementCategoryDescriptor& d, const std::vector<int>& levels)
{
    if (levels.size() != d.level_count())
        throw std::invalid_argument("one level per edge and circle is required");
    const manifold::GraphManifold& m = d.manifold;
    manifold::GraphManifold fine;
    fine.vertices = m.vertices;
    manifold::StratMorphism ref{{}, m, {}, {}, {}};
    for (int v = 0; v < m.vertex_count(); ++v)
        ref.vertex_map.push_back(v);

    std::size_t next = 0;
    for (const auto& f : d.factors) {
        if (f.kind == RefinementFactor::Kind::point)
            continue;
        const int k = levels[next++];
        if (k < 0)
            throw std::invalid_argument("levels must be non-negative");
        if (f.kind == RefinementFactor::Kind::simplex) {
            if (k == 0) {
                fine.edges.push_back({f.name, f.src, f.dst});
                ref.edge_paths.push_back({fine.edge_count() - 1});
                continue;
            }
            std::vector<int> path;
            int at = f.src;
            for (int j = 0; j <= k; ++j) {
                int to = f.dst;
                if (j < k) {
                    fine.vertices.push_back(f.name + "/" + std::to_string(j + 1));
                    to = fine.vertex_count() - 1;
                }
                fine.edges.push_back({f.name + "/" + std::to_string(j), at, to});
                path.push_back(fine.edge_count() - 1);
                at = to;
            }
            ref.edge_paths.push_back(path);
        } else {
            const int first = fine.vertex_count();
            for (int j = 0; j <= k; ++j)
                fine.vertices.push_back(f.name + "/v" + std::to_string(j));
            manifold::ClosedWalk walk{first, {}};
            for (int j = 0; j <= k; ++j) {
                fine.edges.push_back({f.name + "/e" + std::to_string(j), first + j, first + (j + 1) % (k + 1)});
                walk.edges.push_back(fine.edge_count() - 1);
            }
            ref.circle_images.push_back(walk);
        }
    }
    ref.source = fine;
    return ref;
}

manifold::GraphManifold terminal_reconstruction(const RefinementCategoryDescriptor& d)
{
    if (!d.has_terminal())
        throw std::domain_error("the paracyclic factor has no terminal object");
    return realize_refinement(d, std::vector<int>(d.level_count(), 0)).source;
}

nlohmann::json to_json(const RefinementCategoryDescriptor& d)
{
    nlohmann::json factors = nlohmann::json::array();
    const auto& m = d.manifold;
    for (const auto& f : d.factors) {
        switch (f.kind) {
        case RefinementFactor::Kind::point:
            factors.push_back({{"kind", "point"}, {"vertex", f.name}});
            break;
        case RefinementFactor::Kind::simplex:
            factors.push_back({{"kind", "simplex"}, {"edge", f.name}, {"src", m.vertices[f.src]}, {"dst", m.vertices[f.dst]}});
            break;
        case RefinementFactor::Kind::paracyclic:
            factors.push_back({{"kind", "paracyclic"}, {"circle", f.name}});
            break;
        }
    }
    return {{"factors", factors}, {"terminal", d.has_terminal()}};
}

} // namespace fh::indexing
