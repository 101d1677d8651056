#include "fh/facthom/disk.hpp"

#include <map>
#include <stdexcept>

#include "fh/util/union_find.hpp"

namespace fh::facthom {

using fincat::MorphismId;
using fincat::ObjectId;
using manifold::GraphManifold;

fincat::FinCategory enter_category(const GraphManifold& r)
{
    if (!r.disk_stratified())
        throw std::domain_error("entering paths need a disk-stratified manifold");
    fincat::CategoryBuilder b;
    for (const auto& v : r.vertices) {
        ObjectId x = b.add_object("v:" + v);
        b.add_identity(x, "id_v:" + v);
    }
    for (const auto& e : r.edges) {
        ObjectId x = b.add_object("e:" + e.id);
        b.add_identity(x, "id_e:" + e.id);
    }
    for (int i = 0; i < r.edge_count(); ++i) {
        const auto& e = r.edges[i];
        ObjectId x = r.vertex_count() + i;
        b.add_morphism("e:" + e.id + ".src", x, e.src);
        b.add_morphism("e:" + e.id + ".dst", x, e.dst);
    }
    return b.build();
}

fincat::SetDiagram enter_diagram(const GraphManifold& r, const fincat::SimplicialSet& y)
{
    if (y.levels.size() < 2)
        throw std::invalid_argument("the diagram needs levels 0 and 1");
    fincat::SetDiagram d{enter_category(r), {}, {}};
    const auto& c = d.shape;
    for (ObjectId x = 0; x < static_cast<ObjectId>(c.object_count()); ++x)
        d.sizes.push_back(x < r.vertex_count() ? y.levels[0].size : y.levels[1].size);
    for (MorphismId f = 0; f < static_cast<MorphismId>(c.morphism_count()); ++f) {
        if (c.is_identity(f)) {
            std::vector<std::size_t> id(d.sizes[c.source(f)]);
            for (std::size_t i = 0; i < id.size(); ++i)
                id[i] = i;
            d.maps.push_back(std::move(id));
        } else {
            const bool is_src = c.morphism_name(f).ends_with(".src");
            d.maps.push_back(y.levels[1].faces[is_src ? 1 : 0]);
        }
    }
    return d;
}

fincat::Limit cart_facthom_disk(const GraphManifold& r, const fincat::SimplicialSet& y, bool require_segal)
{
    if (require_segal && !fincat::is_segal(y))
        throw std::invalid_argument("the diagram is not Segal");
    return fincat::limit_of_sets(enter_diagram(r, y));
}

namespace {

std::vector<Labeling> all_labelings(const GraphManifold& r, const fincat::FinCategory& c)
{
    std::vector<Labeling> out;
    const std::size_t nv = r.vertices.size(), ne = r.edges.size();
    const std::size_t no = c.object_count();
    Labeling l{std::vector<ObjectId>(nv, 0), std::vector<MorphismId>(ne, -1)};
    auto edges = [&](auto&& self, std::size_t e) -> void {
        if (e == ne) {
            out.push_back(l);
            return;
        }
        for (MorphismId f : c.hom(l.objects[r.edges[e].src], l.objects[r.edges[e].dst])) {
            l.edges[e] = f;
            self(self, e + 1);
        }
    };
    auto objects = [&](auto&& self, std::size_t v) -> void {
        if (v == nv) {
            edges(edges, 0);
            return;
        }
        for (ObjectId x = 0; x < static_cast<ObjectId>(no); ++x) {
            l.objects[v] = x;
            self(self, v + 1);
        }
    };
    objects(objects, 0);
    return out;
}

} // namespace

EnrFacthomSet enr_facthom_disk(const GraphManifold& r, const enrich::SetEnrichedCategory& c)
{
    if (!r.disk_stratified())
        throw std::domain_error("enr_facthom_disk needs a disk-stratified manifold");
    const auto& cat = c.cat;
    EnrFacthomSet out;
    out.all = all_labelings(r, cat);
    UnionFind uf(out.all.size());
    if (!c.discrete_core()) {
        std::map<Labeling, std::size_t> index;
        for (std::size_t i = 0; i < out.all.size(); ++i)
            index.emplace(out.all[i], i);
        for (std::size_t i = 0; i < out.all.size(); ++i) {
            const Labeling& l = out.all[i];
            for (std::size_t v = 0; v < r.vertices.size(); ++v) {
                for (MorphismId h : c.core) {
                    if (cat.source(h) != l.objects[v])
                        continue;
                    const MorphismId hinv = *cat.inverse(h);
                    Labeling moved = l;
                    moved.objects[v] = cat.target(h);
                    for (std::size_t e = 0; e < r.edges.size(); ++e) {
                        if (r.edges[e].src == static_cast<int>(v))
                            moved.edges[e] = cat.compose_or_throw(moved.edges[e], hinv);
                        if (r.edges[e].dst == static_cast<int>(v))
                            moved.edges[e] = cat.compose_or_throw(h, moved.edges[e]);
                    }
                    uf.unite(i, index.at(moved));
                }
            }
        }
    }
    std::size_t count = 0;
    out.orbit_of = uf.labels(&count);
    out.elements.resize(count);
    std::vector<bool> seen(count, false);
    for (std::size_t i = 0; i < out.all.size(); ++i) {
        if (!seen[out.orbit_of[i]]) {
            seen[out.orbit_of[i]] = true;
            out.elements[out.orbit_of[i]] = out.all[i];
        }
    }
    return out;
}

enrich::BasedModule enr_facthom_disk(const GraphManifold& r, const enrich::LinearCategory& c)
{
    if (!r.disk_stratified())
        throw std::domain_error("enr_facthom_disk needs a disk-stratified manifold");
    enrich::BasedModule out;
    const std::size_t nv = r.vertices.size(), ne = r.edges.size();
    std::vector<std::size_t> objects(nv, 0), index(ne, 0);
    auto label = [&] {
        std::string s;
        for (std::size_t v = 0; v < nv; ++v)
            s += (v ? "," : "") + c.object_name(objects[v]);
        s += "|";
        for (std::size_t e = 0; e < ne; ++e)
            s += (e ? "," : "") + std::to_string(index[e]);
        return s;
    };
    auto edges = [&](auto&& self, std::size_t e) -> void {
        if (e == ne) {
            out.basis.push_back(label());
            return;
        }
        const std::size_t d = c.hom_dim(objects[r.edges[e].src], objects[r.edges[e].dst]);
        for (std::size_t i = 0; i < d; ++i) {
            index[e] = i;
            self(self, e + 1);
        }
    };
    auto vertices = [&](auto&& self, std::size_t v) -> void {
        if (v == nv) {
            edges(edges, 0);
            return;
        }
        for (std::size_t x = 0; x < c.object_count(); ++x) {
            objects[v] = x;
            self(self, v + 1);
        }
    };
    vertices(vertices, 0);
    return out;
}

std::vector<std::size_t> labeling_to_family(const Labeling& l, const fincat::SimplicialSet& nerve_of_c,
                                            const enrich::SetEnrichedCategory& c)
{
    std::map<std::string, std::size_t> level0, level1;
    for (std::size_t i = 0; i < nerve_of_c.labels.at(0).size(); ++i)
        level0.emplace(nerve_of_c.labels[0][i], i);
    for (std::size_t i = 0; i < nerve_of_c.labels.at(1).size(); ++i)
        level1.emplace(nerve_of_c.labels[1][i], i);
    std::vector<std::size_t> family;
    for (ObjectId x : l.objects)
        family.push_back(level0.at(c.cat.object_name(x)));
    for (MorphismId f : l.edges)
        family.push_back(level1.at(c.cat.morphism_name(f)));
    return family;
}

} // namespace fh::facthom
