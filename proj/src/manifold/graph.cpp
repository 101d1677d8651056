#include "fh/manifold/graph.hpp"

#include <map>
#include <set>

namespace fh::manifold {

ValidationReport validate_manifold(const GraphManifold& m)
{
    ValidationReport report;
    std::set<std::string> names;
    for (const auto& v : m.vertices) {
        if (!names.insert(v).second)
            report.add("duplicate vertex " + v);
    }
    std::set<std::string> edge_names;
    for (const auto& e : m.edges) {
        if (!edge_names.insert(e.id).second)
            report.add("duplicate edge " + e.id);
        if (e.src < 0 || e.src >= m.vertex_count())
            report.add("edge " + e.id + " has a dangling source");
        if (e.dst < 0 || e.dst >= m.vertex_count())
            report.add("edge " + e.id + " has a dangling target");
    }
    if (m.circles < 0)
        report.add("negative circle count");
    return report;
}

GraphManifold point()
{
    return {{"v"}, {}, 0};
}

GraphManifold interval()
{
    return {{"v0", "v1"}, {{"e", 0, 1}}, 0};
}

GraphManifold pointed_circle()
{
    return {{"v"}, {{"e", 0, 0}}, 0};
}

GraphManifold circle()
{
    return {{}, {}, 1};
}

GraphManifold chain(int n)
{
    GraphManifold m;
    for (int i = 0; i <= n; ++i)
        m.vertices.push_back("v" + std::to_string(i));
    for (int i = 0; i < n; ++i)
        m.edges.push_back({"e" + std::to_string(i + 1), i, i + 1});
    return m;
}

GraphManifold marked_circle(int n)
{
    GraphManifold m;
    for (int i = 0; i < n; ++i)
        m.vertices.push_back("v" + std::to_string(i));
    for (int i = 0; i < n; ++i)
        m.edges.push_back({"e" + std::to_string(i), i, (i + 1) % n});
    return m;
}

GraphManifold disjoint_union(const GraphManifold& a, const GraphManifold& b)
{
    GraphManifold out = a;
    const int shift = a.vertex_count();
    for (const auto& v : b.vertices)
        out.vertices.push_back(v + "'");
    for (const auto& e : b.edges)
        out.edges.push_back({e.id + "'", e.src + shift, e.dst + shift});
    out.circles += b.circles;
    return out;
}

GraphManifold manifold_from_json(const nlohmann::json& doc)
{
    if (!doc.is_object() || !doc.contains("vertices") || !doc.contains("edges"))
        throw SchemaError("manifold document needs 'vertices' and 'edges'");
    try {
        GraphManifold m;
        m.vertices = doc.at("vertices").get<std::vector<std::string>>();
        std::map<std::string, int> index;
        for (int i = 0; i < m.vertex_count(); ++i)
            index.emplace(m.vertices[i], i);
        auto lookup = [&](const std::string& v) {
            auto it = index.find(v);
            return it == index.end() ? -1 : it->second;
        };
        for (const auto& e : doc.at("edges")) {
            m.edges.push_back(
                {e.at("id").get<std::string>(), lookup(e.at("src").get<std::string>()), lookup(e.at("dst").get<std::string>())});
        }
        m.circles = doc.value("circles", 0);
        return m;
    } catch (const nlohmann::json::exception& e) {
        throw SchemaError(std::string("malformed manifold document: ") + e.what());
    }
}

nlohmann::json to_json(const GraphManifold& m)
{
    nlohmann::json doc;
    doc["vertices"] = m.vertices;
    doc["edges"] = nlohmann::json::array();
    for (const auto& e : m.edges) {
        auto name = [&](int v) { return v >= 0 && v < m.vertex_count() ? m.vertices[v] : std::string("?"); };
        doc["edges"].push_back({{"id", e.id}, {"src", name(e.src)}, {"dst", name(e.dst)}});
    }
    doc["circles"] = m.circles;
    return doc;
}

} // namespace fh::manifold
