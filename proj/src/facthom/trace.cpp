#include "fh/facthom/trace.hpp"

#include <stdexcept>

#include "fh/facthom/cyclic_bar.hpp"
#include "fh/facthom/disk.hpp"
#include "fh/fincat/set_diagram.hpp"
#include "fh/util/union_find.hpp"

namespace fh::facthom {

using fincat::MorphismId;
using fincat::ObjectId;

TraceClassTable thh_set_pi0(const fincat::FinCategory& c)
{
    TraceClassTable t;
    const std::size_t nm = c.morphism_count();
    t.endomorphisms.resize(c.object_count());
    t.class_of.assign(nm, std::nullopt);
    for (ObjectId x = 0; x < static_cast<ObjectId>(c.object_count()); ++x) {
        auto hom = c.hom(x, x);
        t.endomorphisms[x].assign(hom.begin(), hom.end());
    }
    UnionFind uf(nm);
    for (auto [g, f, gf] : c.composites()) {
        if (c.source(f) != c.target(g))
            continue;
        auto fg = c.compose(f, g);
        if (fg.defined())
            uf.unite(static_cast<std::size_t>(gf), static_cast<std::size_t>(fg.value));
    }
    std::vector<std::optional<std::size_t>> class_of_root(nm);
    for (MorphismId f = 0; f < static_cast<MorphismId>(nm); ++f) {
        if (c.source(f) != c.target(f))
            continue;
        auto root = uf.find(static_cast<std::size_t>(f));
        if (!class_of_root[root]) {
            class_of_root[root] = t.classes.size();
            t.classes.push_back({f, {}});
        }
        auto& cls = t.classes[*class_of_root[root]];
        cls.members.push_back(f);
        if (c.morphism_name(f) < c.morphism_name(cls.rep))
            cls.rep = f;
        t.class_of[f] = *class_of_root[root];
    }
    return t;
}

std::optional<std::size_t> class_of_word(const fincat::FinCategory& c, const TraceClassTable& table,
                                         const std::vector<MorphismId>& word)
{
    if (word.empty())
        throw std::invalid_argument("empty cyclic word");
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (c.target(word[i]) != c.source(word[(i + 1) % word.size()]))
            throw std::invalid_argument("word is not a cyclic string");
    }
    MorphismId total = word[0];
    for (std::size_t i = 1; i < word.size(); ++i) {
        auto next = c.compose(word[i], total);
        if (!next.defined())
            return std::nullopt;
        total = next.value;
    }
    return table.class_of[total];
}

std::vector<std::size_t> thh_set_pi0_coequalizer(const fincat::FinCategory& c, std::size_t* class_count)
{
    auto levels = cyclic_bar_levels(c, 1);
    fincat::SetDiagram d{fincat::parallel_pair(), {}, {}};
    const auto& shape = d.shape;
    const ObjectId s = *shape.find_object("s");
    d.sizes.assign(2, 0);
    d.sizes[s] = levels[1].elements.size();
    d.sizes[1 - s] = levels[0].elements.size();
    d.maps.resize(shape.morphism_count());
    for (MorphismId f = 0; f < static_cast<MorphismId>(shape.morphism_count()); ++f) {
        const auto& name = shape.morphism_name(f);
        if (shape.is_identity(f)) {
            std::vector<std::size_t> id(d.sizes[shape.source(f)]);
            for (std::size_t i = 0; i < id.size(); ++i)
                id[i] = i;
            d.maps[f] = std::move(id);
        } else {
            d.maps[f] = levels[1].faces[name == "d0" ? 0 : 1];
        }
    }
    auto colim = fincat::colimit_of_sets(d);
    if (class_count)
        *class_count = colim.size;
    // Level 0 is sorted by morphism id, which is the flattened endomorphism order.
    return colim.cocone[1 - s];
}

nlohmann::json to_json(const TraceClassTable& table, const fincat::FinCategory& c)
{
    nlohmann::json classes = nlohmann::json::array();
    for (const auto& cls : table.classes) {
        nlohmann::json members = nlohmann::json::array();
        for (MorphismId f : cls.members)
            members.push_back(c.morphism_name(f));
        classes.push_back({{"rep", c.morphism_name(cls.rep)}, {"members", members}});
    }
    return {{"classes", classes}};
}

FacthomCount facthom_set_pi0(const manifold::GraphManifold& m, const enrich::SetEnrichedCategory& c)
{
    manifold::GraphManifold graph = m;
    graph.circles = 0;
    FacthomCount out;
    out.graph_part = enr_facthom_disk(graph, c).size();
    out.total = out.graph_part;
    if (m.circles > 0) {
        const std::size_t classes = thh_set_pi0(c.cat).classes.size();
        for (int i = 0; i < m.circles; ++i) {
            out.circle_parts.push_back(classes);
            out.total *= classes;
        }
    }
    return out;
}

} // namespace fh::facthom
