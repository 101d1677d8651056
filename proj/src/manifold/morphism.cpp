#include "fh/manifold/morphism.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace fh::manifold {

namespace {

bool walk_connects(const GraphManifold& m, const std::vector<int>& walk, int from, int to)
{
    int at = from;
    for (int e : walk) {
        if (e < 0 || e >= m.edge_count() || m.edges[e].src != at)
            return false;
        at = m.edges[e].dst;
    }
    return at == to;
}

ClosedWalk canonical(ClosedWalk w, const GraphManifold& m)
{
    if (w.edges.empty())
        return w;
    std::vector<int> best = w.edges;
    for (std::size_t r = 1; r < w.edges.size(); ++r) {
        std::vector<int> rotated(w.edges.begin() + r, w.edges.end());
        rotated.insert(rotated.end(), w.edges.begin(), w.edges.begin() + r);
        best = std::min(best, rotated);
    }
    return {m.edges[best.front()].src, best};
}

struct Visits {
    std::vector<int> vertices;
    std::vector<int> edges;
    std::vector<int> circles;
};

Visits visits(const StratMorphism& m)
{
    Visits v{std::vector<int>(m.source.vertex_count()), std::vector<int>(m.source.edge_count()),
             std::vector<int>(m.source.circles)};
    auto walk = [&](const std::vector<int>& edges) {
        for (int e : edges) {
            ++v.edges[e];
            ++v.vertices[m.source.edges[e].src];
            ++v.vertices[m.source.edges[e].dst];
        }
    };
    for (int x : m.vertex_map)
        ++v.vertices[x];
    for (const auto& p : m.edge_paths)
        walk(p);
    for (const auto& c : m.circle_images) {
        if (const auto* cover = std::get_if<CircleCover>(&c)) {
            ++v.circles[cover->circle];
        } else {
            const auto& w = std::get<ClosedWalk>(c);
            walk(w.edges);
            ++v.vertices[w.base];
        }
    }
    return v;
}

bool all_positive(const std::vector<int>& counts)
{
    return std::all_of(counts.begin(), counts.end(), [](int c) { return c > 0; });
}

template <class T>
bool injective(const std::vector<T>& values)
{
    std::set<T> seen(values.begin(), values.end());
    return seen.size() == values.size();
}

std::vector<int> concatenate(const StratMorphism& m, const std::vector<int>& walk)
{
    std::vector<int> out;
    for (int e : walk)
        out.insert(out.end(), m.edge_paths[e].begin(), m.edge_paths[e].end());
    return out;
}

} // namespace

std::string to_string(MorphismClass c)
{
    switch (c) {
    case MorphismClass::isomorphism:
        return "isomorphism";
    case MorphismClass::closed:
        return "closed";
    case MorphismClass::creation:
        return "creation";
    case MorphismClass::refinement:
        return "refinement";
    case MorphismClass::closed_creation:
        return "closed-creation";
    case MorphismClass::active:
        return "active";
    case MorphismClass::general:
        return "general";
    }
    return "general";
}

ValidationReport validate_morphism(const StratMorphism& m)
{
    ValidationReport report = validate_manifold(m.source);
    report.merge(validate_manifold(m.target));
    if (!report.ok())
        return report;
    const GraphManifold& s = m.source;
    const GraphManifold& t = m.target;
    if (static_cast<int>(m.vertex_map.size()) != t.vertex_count()) {
        report.add("vertex map does not cover the target vertices");
        return report;
    }
    for (int i = 0; i < t.vertex_count(); ++i) {
        if (m.vertex_map[i] < 0 || m.vertex_map[i] >= s.vertex_count())
            report.add("vertex " + t.vertices[i] + " maps outside the source");
    }
    if (static_cast<int>(m.edge_paths.size()) != t.edge_count())
        report.add("edge map does not cover the target edges");
    if (static_cast<int>(m.circle_images.size()) != t.circles)
        report.add("circle map does not cover the target circles");
    if (!report.ok())
        return report;
    for (int i = 0; i < t.edge_count(); ++i) {
        const auto& e = t.edges[i];
        if (!walk_connects(s, m.edge_paths[i], m.vertex_map[e.src], m.vertex_map[e.dst]))
            report.add("edge " + e.id + " is not sent to a walk between the images of its endpoints");
    }
    for (int c = 0; c < t.circles; ++c) {
        if (const auto* cover = std::get_if<CircleCover>(&m.circle_images[c])) {
            if (cover->circle < 0 || cover->circle >= s.circles || cover->degree < 1)
                report.add("circle " + std::to_string(c) + " has an invalid cover");
        } else {
            const auto& w = std::get<ClosedWalk>(m.circle_images[c]);
            if (w.base < 0 || w.base >= s.vertex_count() || !walk_connects(s, w.edges, w.base, w.base))
                report.add("circle " + std::to_string(c) + " is not sent to a closed walk");
        }
    }
    return report;
}

StratMorphism identity(const GraphManifold& m)
{
    StratMorphism id{m, m, {}, {}, {}};
    for (int v = 0; v < m.vertex_count(); ++v)
        id.vertex_map.push_back(v);
    for (int e = 0; e < m.edge_count(); ++e)
        id.edge_paths.push_back({e});
    for (int c = 0; c < m.circles; ++c)
        id.circle_images.push_back(CircleCover{c, 1});
    return id;
}

bool is_closed_creation(const StratMorphism& m)
{
    for (const auto& p : m.edge_paths) {
        if (p.size() > 1)
            return false;
    }
    for (const auto& c : m.circle_images) {
        if (const auto* w = std::get_if<ClosedWalk>(&c); w && !w->edges.empty())
            return false;
    }
    return true;
}

bool is_closed(const StratMorphism& m)
{
    std::vector<int> edges;
    for (const auto& p : m.edge_paths) {
        if (p.size() != 1)
            return false;
        edges.push_back(p.front());
    }
    std::vector<int> circles;
    for (const auto& c : m.circle_images) {
        const auto* cover = std::get_if<CircleCover>(&c);
        if (!cover || cover->degree != 1)
            return false;
        circles.push_back(cover->circle);
    }
    return injective(m.vertex_map) && injective(edges) && injective(circles);
}

bool is_active(const StratMorphism& m)
{
    Visits v = visits(m);
    return all_positive(v.vertices) && all_positive(v.edges) && all_positive(v.circles);
}

bool is_creation(const StratMorphism& m)
{
    return is_closed_creation(m) && is_active(m);
}

bool is_refinement(const StratMorphism& m)
{
    const GraphManifold& s = m.source;
    std::vector<int> edge_uses(s.edge_count());
    std::vector<int> interior(s.vertex_count());
    std::vector<int> circle_uses(s.circles);
    for (const auto& p : m.edge_paths) {
        if (p.empty())
            return false;
        for (std::size_t i = 0; i < p.size(); ++i) {
            ++edge_uses[p[i]];
            if (i + 1 < p.size())
                ++interior[s.edges[p[i]].dst];
        }
    }
    for (const auto& c : m.circle_images) {
        if (const auto* cover = std::get_if<CircleCover>(&c)) {
            if (cover->degree != 1)
                return false;
            ++circle_uses[cover->circle];
        } else {
            const auto& w = std::get<ClosedWalk>(c);
            if (w.edges.empty())
                return false;
            for (int e : w.edges) {
                ++edge_uses[e];
                ++interior[s.edges[e].src];
            }
        }
    }
    auto once = [](const std::vector<int>& v) { return std::all_of(v.begin(), v.end(), [](int c) { return c == 1; }); };
    if (!once(edge_uses) || !once(circle_uses) || !injective(m.vertex_map))
        return false;
    std::vector<bool> image(s.vertex_count());
    for (int x : m.vertex_map)
        image[x] = true;
    for (int x = 0; x < s.vertex_count(); ++x) {
        if (image[x] ? interior[x] != 0 : interior[x] != 1)
            return false;
    }
    return true;
}

MorphismClass classify_morphism(const StratMorphism& m)
{
    const bool closed = is_closed(m);
    const bool active = is_active(m);
    if (closed && active)
        return MorphismClass::isomorphism;
    if (closed)
        return MorphismClass::closed;
    const bool cc = is_closed_creation(m);
    if (cc && active)
        return MorphismClass::creation;
    if (is_refinement(m))
        return MorphismClass::refinement;
    if (cc)
        return MorphismClass::closed_creation;
    if (active)
        return MorphismClass::active;
    return MorphismClass::general;
}

StratMorphism compose_morphisms(const StratMorphism& m1, const StratMorphism& m2)
{
    if (!(m1.target == m2.source))
        throw std::invalid_argument("morphisms are not composable: target and source differ");
    StratMorphism out{m1.source, m2.target, {}, {}, {}};
    for (int v : m2.vertex_map)
        out.vertex_map.push_back(m1.vertex_map[v]);
    for (const auto& p : m2.edge_paths)
        out.edge_paths.push_back(concatenate(m1, p));
    for (const auto& c : m2.circle_images) {
        if (const auto* cover = std::get_if<CircleCover>(&c)) {
            const CircleImage& inner = m1.circle_images[cover->circle];
            if (const auto* inner_cover = std::get_if<CircleCover>(&inner)) {
                out.circle_images.push_back(CircleCover{inner_cover->circle, inner_cover->degree * cover->degree});
            } else {
                const auto& w = std::get<ClosedWalk>(inner);
                ClosedWalk repeated{w.base, {}};
                for (int r = 0; r < cover->degree; ++r)
                    repeated.edges.insert(repeated.edges.end(), w.edges.begin(), w.edges.end());
                out.circle_images.push_back(repeated);
            }
        } else {
            const auto& w = std::get<ClosedWalk>(c);
            out.circle_images.push_back(ClosedWalk{m1.vertex_map[w.base], concatenate(m1, w.edges)});
        }
    }
    return out;
}

bool same_morphism(const StratMorphism& a, const StratMorphism& b)
{
    if (!(a.source == b.source) || !(a.target == b.target) || a.vertex_map != b.vertex_map ||
        a.edge_paths != b.edge_paths || a.circle_images.size() != b.circle_images.size())
        return false;
    for (std::size_t c = 0; c < a.circle_images.size(); ++c) {
        const auto* wa = std::get_if<ClosedWalk>(&a.circle_images[c]);
        const auto* wb = std::get_if<ClosedWalk>(&b.circle_images[c]);
        if (wa && wb) {
            if (!(canonical(*wa, a.source) == canonical(*wb, b.source)))
                return false;
        } else if (!(a.circle_images[c] == b.circle_images[c])) {
            return false;
        }
    }
    return true;
}

std::pair<StratMorphism, StratMorphism> factor_closed_active(const StratMorphism& m)
{
    Visits v = visits(m);
    const GraphManifold& s = m.source;
    GraphManifold image;
    StratMorphism closed{s, {}, {}, {}, {}};
    std::vector<int> vertex_index(s.vertex_count(), -1);
    std::vector<int> edge_index(s.edge_count(), -1);
    std::vector<int> circle_index(s.circles, -1);
    for (int x = 0; x < s.vertex_count(); ++x) {
        if (v.vertices[x] > 0) {
            vertex_index[x] = image.vertex_count();
            image.vertices.push_back(s.vertices[x]);
            closed.vertex_map.push_back(x);
        }
    }
    for (int e = 0; e < s.edge_count(); ++e) {
        if (v.edges[e] > 0) {
            edge_index[e] = image.edge_count();
            image.edges.push_back({s.edges[e].id, vertex_index[s.edges[e].src], vertex_index[s.edges[e].dst]});
            closed.edge_paths.push_back({e});
        }
    }
    for (int c = 0; c < s.circles; ++c) {
        if (v.circles[c] > 0) {
            circle_index[c] = image.circles++;
            closed.circle_images.push_back(CircleCover{c, 1});
        }
    }
    closed.target = image;

    StratMorphism active{image, m.target, {}, {}, {}};
    auto reindex = [&](const std::vector<int>& walk) {
        std::vector<int> out;
        for (int e : walk)
            out.push_back(edge_index[e]);
        return out;
    };
    for (int x : m.vertex_map)
        active.vertex_map.push_back(vertex_index[x]);
    for (const auto& p : m.edge_paths)
        active.edge_paths.push_back(reindex(p));
    for (const auto& c : m.circle_images) {
        if (const auto* cover = std::get_if<CircleCover>(&c))
            active.circle_images.push_back(CircleCover{circle_index[cover->circle], cover->degree});
        else {
            const auto& w = std::get<ClosedWalk>(c);
            active.circle_images.push_back(ClosedWalk{vertex_index[w.base], reindex(w.edges)});
        }
    }
    return {closed, active};
}

std::pair<StratMorphism, StratMorphism> factor_creation_refinement(const StratMorphism& m)
{
    if (!is_active(m))
        throw std::domain_error("only active morphisms factor as a creation followed by a refinement");
    const GraphManifold& s = m.source;
    const GraphManifold& t = m.target;
    GraphManifold mid;
    mid.vertices = t.vertices;
    StratMorphism creation{s, {}, m.vertex_map, {}, {}};
    StratMorphism refinement{{}, t, {}, {}, {}};
    for (int x = 0; x < t.vertex_count(); ++x)
        refinement.vertex_map.push_back(x);

    auto add_vertex = [&](std::string name, int image) {
        mid.vertices.push_back(std::move(name));
        creation.vertex_map.push_back(image);
        return mid.vertex_count() - 1;
    };
    auto add_edge = [&](std::string name, int src, int dst, std::vector<int> image) {
        mid.edges.push_back({std::move(name), src, dst});
        creation.edge_paths.push_back(std::move(image));
        return mid.edge_count() - 1;
    };

    for (int i = 0; i < t.edge_count(); ++i) {
        const auto& e = t.edges[i];
        const auto& path = m.edge_paths[i];
        if (path.size() <= 1) {
            refinement.edge_paths.push_back({add_edge(e.id, e.src, e.dst, path)});
            continue;
        }
        std::vector<int> pieces;
        int at = e.src;
        for (std::size_t k = 0; k < path.size(); ++k) {
            int next = k + 1 == path.size()
                           ? e.dst
                           : add_vertex(e.id + "#" + std::to_string(k + 1), s.edges[path[k]].dst);
            pieces.push_back(add_edge(e.id + "#" + std::to_string(k), at, next, {path[k]}));
            at = next;
        }
        refinement.edge_paths.push_back(pieces);
    }
    for (int c = 0; c < t.circles; ++c) {
        const auto* w = std::get_if<ClosedWalk>(&m.circle_images[c]);
        if (!w || w->edges.empty()) {
            creation.circle_images.push_back(m.circle_images[c]);
            refinement.circle_images.push_back(CircleCover{mid.circles++, 1});
            continue;
        }
        const std::string stem = "c" + std::to_string(c) + "#";
        const int k = static_cast<int>(w->edges.size());
        std::vector<int> ring;
        for (int j = 0; j < k; ++j)
            ring.push_back(add_vertex(stem + "v" + std::to_string(j), s.edges[w->edges[j]].src));
        std::vector<int> cycle;
        for (int j = 0; j < k; ++j)
            cycle.push_back(add_edge(stem + "e" + std::to_string(j), ring[j], ring[(j + 1) % k], {w->edges[j]}));
        refinement.circle_images.push_back(ClosedWalk{ring.front(), cycle});
    }
    creation.target = mid;
    refinement.source = mid;
    return {creation, refinement};
}

std::pair<GraphManifold, StratMorphism> blowup(const GraphManifold& m)
{
    GraphManifold bl;
    StratMorphism cre{m, {}, {}, {}, {}};
    for (int i = 0; i < m.edge_count(); ++i) {
        const auto& e = m.edges[i];
        bl.vertices.push_back(e.id + "-");
        bl.vertices.push_back(e.id + "+");
        bl.edges.push_back({e.id, 2 * i, 2 * i + 1});
        cre.vertex_map.push_back(e.src);
        cre.vertex_map.push_back(e.dst);
        cre.edge_paths.push_back({i});
    }
    std::vector<bool> incident(m.vertex_count());
    for (const auto& e : m.edges)
        incident[e.src] = incident[e.dst] = true;
    for (int x = 0; x < m.vertex_count(); ++x) {
        if (!incident[x]) {
            bl.vertices.push_back(m.vertices[x]);
            cre.vertex_map.push_back(x);
        }
    }
    bl.circles = m.circles;
    for (int c = 0; c < m.circles; ++c)
        cre.circle_images.push_back(CircleCover{c, 1});
    cre.target = bl;
    return {bl, cre};
}

StratMorphism morphism_from_json(const nlohmann::json& doc)
{
    if (!doc.is_object() || !doc.contains("source") || !doc.contains("target"))
        throw SchemaError("morphism document needs 'source' and 'target'");
    StratMorphism m;
    m.source = manifold_from_json(doc.at("source"));
    m.target = manifold_from_json(doc.at("target"));
    std::map<std::string, int> sv, se;
    for (int i = 0; i < m.source.vertex_count(); ++i)
        sv.emplace(m.source.vertices[i], i);
    for (int i = 0; i < m.source.edge_count(); ++i)
        se.emplace(m.source.edges[i].id, i);
    auto find = [](const std::map<std::string, int>& index, const std::string& key) {
        auto it = index.find(key);
        if (it == index.end())
            throw SchemaError("unknown source cell '" + key + "'");
        return it->second;
    };
    try {
        const auto& vertices = doc.at("vertices");
        for (const auto& v : m.target.vertices)
            m.vertex_map.push_back(find(sv, vertices.at(v).get<std::string>()));
        const auto& edges = doc.at("edges");
        for (const auto& e : m.target.edges) {
            std::vector<int> path;
            for (const auto& id : edges.at(e.id))
                path.push_back(find(se, id.get<std::string>()));
            m.edge_paths.push_back(path);
        }
        for (const auto& c : doc.value("circles", nlohmann::json::array())) {
            if (c.contains("walk")) {
                ClosedWalk w{find(sv, c.at("base").get<std::string>()), {}};
                for (const auto& id : c.at("walk"))
                    w.edges.push_back(find(se, id.get<std::string>()));
                m.circle_images.push_back(w);
            } else {
                m.circle_images.push_back(CircleCover{c.at("circle").get<int>(), c.value("degree", 1)});
            }
        }
    } catch (const nlohmann::json::exception& e) {
        throw SchemaError(std::string("malformed morphism document: ") + e.what());
    }
    return m;
}

nlohmann::json to_json(const StratMorphism& m)
{
    nlohmann::json doc;
    doc["source"] = to_json(m.source);
    doc["target"] = to_json(m.target);
    doc["vertices"] = nlohmann::json::object();
    for (int i = 0; i < m.target.vertex_count(); ++i)
        doc["vertices"][m.target.vertices[i]] = m.source.vertices[m.vertex_map[i]];
    doc["edges"] = nlohmann::json::object();
    for (int i = 0; i < m.target.edge_count(); ++i) {
        nlohmann::json path = nlohmann::json::array();
        for (int e : m.edge_paths[i])
            path.push_back(m.source.edges[e].id);
        doc["edges"][m.target.edges[i].id] = path;
    }
    doc["circles"] = nlohmann::json::array();
    for (const auto& c : m.circle_images) {
        if (const auto* cover = std::get_if<CircleCover>(&c)) {
            doc["circles"].push_back({{"circle", cover->circle}, {"degree", cover->degree}});
        } else {
            const auto& w = std::get<ClosedWalk>(c);
            nlohmann::json walk = nlohmann::json::array();
            for (int e : w.edges)
                walk.push_back(m.source.edges[e].id);
            doc["circles"].push_back({{"base", m.source.vertices[w.base]}, {"walk", walk}});
        }
    }
    return doc;
}

} // namespace fh::manifold
