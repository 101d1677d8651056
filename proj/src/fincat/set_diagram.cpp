#include "fh/fincat/set_diagram.hpp"

#include <functional>
#include <string>

#include "fh/util/union_find.hpp"

namespace fh::fincat {

ValidationReport validate_diagram(const SetDiagram& d)
{
    ValidationReport report;
    const auto& c = d.shape;
    if (d.sizes.size() != c.object_count())
        report.add("object count mismatch");
    if (d.maps.size() != c.morphism_count())
        report.add("morphism count mismatch");
    if (!report.ok())
        return report;
    for (MorphismId f = 0; f < static_cast<MorphismId>(c.morphism_count()); ++f) {
        const auto& table = d.maps[f];
        if (table.size() != d.sizes[c.source(f)]) {
            report.add("map " + c.morphism_name(f) + " has the wrong domain size");
            continue;
        }
        for (std::size_t v : table) {
            if (v >= d.sizes[c.target(f)]) {
                report.add("map " + c.morphism_name(f) + " leaves its codomain");
                break;
            }
        }
    }
    if (!report.ok())
        return report;
    for (ObjectId x = 0; x < static_cast<ObjectId>(c.object_count()); ++x) {
        const auto& id = d.maps[c.unit(x)];
        for (std::size_t i = 0; i < id.size(); ++i) {
            if (id[i] != i) {
                report.add("identity of " + c.object_name(x) + " is not sent to the identity");
                break;
            }
        }
    }
    for (auto [g, f, gf] : c.composites()) {
        for (std::size_t i = 0; i < d.sizes[c.source(f)]; ++i) {
            if (d.maps[g][d.maps[f][i]] != d.maps[gf][i]) {
                report.add("functoriality fails on (" + c.morphism_name(g) + "," + c.morphism_name(f) + ")");
                break;
            }
        }
    }
    return report;
}

Colimit colimit_of_sets(const SetDiagram& d)
{
    const auto& c = d.shape;
    std::vector<std::size_t> offset(c.object_count() + 1, 0);
    for (std::size_t x = 0; x < c.object_count(); ++x)
        offset[x + 1] = offset[x] + d.sizes[x];
    UnionFind uf(offset.back());
    for (MorphismId f = 0; f < static_cast<MorphismId>(c.morphism_count()); ++f) {
        const std::size_t s = offset[c.source(f)];
        const std::size_t t = offset[c.target(f)];
        for (std::size_t i = 0; i < d.maps[f].size(); ++i)
            uf.unite(s + i, t + d.maps[f][i]);
    }
    Colimit out;
    auto label = uf.labels(&out.size);
    out.cocone.resize(c.object_count());
    out.representatives.assign(out.size, {-1, 0});
    for (std::size_t x = 0; x < c.object_count(); ++x) {
        out.cocone[x].resize(d.sizes[x]);
        for (std::size_t i = 0; i < d.sizes[x]; ++i) {
            std::size_t k = label[offset[x] + i];
            out.cocone[x][i] = k;
            if (out.representatives[k].first < 0)
                out.representatives[k] = {static_cast<ObjectId>(x), i};
        }
    }
    return out;
}

Limit limit_of_sets(const SetDiagram& d)
{
    const auto& c = d.shape;
    const std::size_t n = c.object_count();
    // Constraints are checked as soon as both endpoints are assigned.
    std::vector<std::vector<MorphismId>> checks(n);
    for (MorphismId f = 0; f < static_cast<MorphismId>(c.morphism_count()); ++f) {
        if (c.is_identity(f))
            continue;
        auto later = static_cast<std::size_t>(std::max(c.source(f), c.target(f)));
        checks[later].push_back(f);
    }
    Limit out;
    std::vector<std::size_t> family(n);
    std::function<void(std::size_t)> extend = [&](std::size_t x) {
        if (x == n) {
            out.families.push_back(family);
            return;
        }
        for (std::size_t i = 0; i < d.sizes[x]; ++i) {
            family[x] = i;
            bool good = true;
            for (MorphismId f : checks[x]) {
                if (d.maps[f][family[c.source(f)]] != family[c.target(f)]) {
                    good = false;
                    break;
                }
            }
            if (good)
                extend(x + 1);
        }
    };
    extend(0);
    return out;
}

FinCategory discrete_category(std::size_t n)
{
    CategoryBuilder b;
    for (std::size_t i = 0; i < n; ++i) {
        ObjectId x = b.add_object("x" + std::to_string(i));
        b.add_identity(x, "id_x" + std::to_string(i));
    }
    return b.build();
}

FinCategory parallel_pair()
{
    CategoryBuilder b;
    ObjectId s = b.add_object("s");
    ObjectId t = b.add_object("t");
    b.add_identity(s, "id_s");
    b.add_identity(t, "id_t");
    b.add_morphism("d0", s, t);
    b.add_morphism("d1", s, t);
    return b.build();
}

FinCategory cospan_shape()
{
    CategoryBuilder b;
    ObjectId a = b.add_object("a");
    ObjectId bb = b.add_object("b");
    ObjectId c = b.add_object("c");
    b.add_identity(a, "id_a");
    b.add_identity(bb, "id_b");
    b.add_identity(c, "id_c");
    b.add_morphism("f", a, c);
    b.add_morphism("g", bb, c);
    return b.build();
}

FinCategory group_category(const std::vector<std::vector<int>>& table)
{
    CategoryBuilder b;
    ObjectId x = b.add_object("*");
    std::vector<MorphismId> ids;
    for (std::size_t g = 0; g < table.size(); ++g)
        ids.push_back(b.add_morphism("g" + std::to_string(g), x, x));
    b.set_unit(x, ids[0]);
    for (std::size_t g = 0; g < table.size(); ++g) {
        for (std::size_t h = 0; h < table.size(); ++h)
            b.set_composite(ids[g], ids[h], ids[table[g][h]]);
    }
    return b.build();
}

} // namespace fh::fincat
