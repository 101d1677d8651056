#include "fh/fincat/simplicial.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace fh::fincat {

std::vector<MonotoneMap> monotone_maps(int m, int n)
{
    std::vector<MonotoneMap> out;
    if (n < 0)
        return out;
    MonotoneMap cur(static_cast<std::size_t>(m + 1));
    std::function<void(int, int)> fill = [&](int i, int lo) {
        if (i > m) {
            out.push_back(cur);
            return;
        }
        for (int v = lo; v <= n; ++v) {
            cur[i] = v;
            fill(i + 1, v);
        }
    };
    fill(0, 0);
    return out;
}

namespace {

std::string map_name(int m, int n, const MonotoneMap& f)
{
    std::string s = "[" + std::to_string(m) + ">" + std::to_string(n) + "]";
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (i)
            s += ",";
        s += std::to_string(f[i]);
    }
    return s;
}

} // namespace

FinCategory truncated_simplex_category(int top)
{
    CategoryBuilder b;
    for (int k = 0; k <= top; ++k)
        b.add_object("[" + std::to_string(k) + "]");
    std::map<std::pair<int, MonotoneMap>, MorphismId> id;
    std::vector<std::vector<std::vector<std::pair<MonotoneMap, MorphismId>>>> homs(
        top + 1, std::vector<std::vector<std::pair<MonotoneMap, MorphismId>>>(top + 1));
    for (int m = 0; m <= top; ++m) {
        for (int n = 0; n <= top; ++n) {
            for (auto& f : monotone_maps(m, n)) {
                MorphismId fid = b.add_morphism(map_name(m, n, f), m, n);
                id[{n, f}] = fid;
                homs[m][n].push_back({f, fid});
                if (m == n) {
                    bool identity = true;
                    for (int i = 0; i <= m; ++i)
                        identity = identity && f[i] == i;
                    if (identity)
                        b.set_unit(m, fid);
                }
            }
        }
    }
    for (int a = 0; a <= top; ++a) {
        for (int bb = 0; bb <= top; ++bb) {
            for (int c = 0; c <= top; ++c) {
                for (const auto& [f, fid] : homs[a][bb]) {
                    for (const auto& [g, gid] : homs[bb][c]) {
                        MonotoneMap gf(f.size());
                        for (std::size_t i = 0; i < f.size(); ++i)
                            gf[i] = g[f[i]];
                        b.set_composite(gid, fid, id.at({c, gf}));
                    }
                }
            }
        }
    }
    return b.build_unchecked();
}

std::size_t SimplicialSet::act(const MonotoneMap& theta, int n, std::size_t x) const
{
    const int m = static_cast<int>(theta.size()) - 1;
    std::vector<int> image;
    for (int v : theta) {
        if (image.empty() || image.back() != v)
            image.push_back(v);
    }
    // Mono part: delete the missing vertices from the top down.
    int level = n;
    for (int j = n; j >= 0; --j) {
        if (!std::binary_search(image.begin(), image.end(), j)) {
            x = levels.at(level).faces.at(j).at(x);
            --level;
        }
    }
    // Epi part: repeat vertices left to right.
    for (int i = 0; i < m; ++i) {
        if (theta[i] == theta[i + 1]) {
            x = levels.at(level).degeneracies.at(i).at(x);
            ++level;
        }
    }
    return x;
}

ValidationReport validate_simplicial(const SimplicialSet& s)
{
    ValidationReport report;
    const int top = static_cast<int>(s.top());
    auto face = [&](int n, int i, std::size_t x) { return s.levels[n].faces[i][x]; };
    auto degen = [&](int n, int i, std::size_t x) { return s.levels[n].degeneracies[i][x]; };
    for (int n = 0; n <= top; ++n) {
        const auto& lv = s.levels[n];
        if (n > 0 && lv.faces.size() != static_cast<std::size_t>(n + 1))
            report.add("level " + std::to_string(n) + " has the wrong number of faces");
        if (n < top && lv.degeneracies.size() != static_cast<std::size_t>(n + 1))
            report.add("level " + std::to_string(n) + " has the wrong number of degeneracies");
    }
    if (!report.ok())
        return report;
    for (int n = 2; n <= top; ++n) {
        bool ok = true;
        for (std::size_t x = 0; x < s.levels[n].size && ok; ++x) {
            for (int j = 1; j <= n; ++j) {
                for (int i = 0; i < j; ++i)
                    ok = ok && face(n - 1, i, face(n, j, x)) == face(n - 1, j - 1, face(n, i, x));
            }
        }
        if (!ok)
            report.add("d_i d_j = d_{j-1} d_i fails at level " + std::to_string(n));
    }
    for (int n = 0; n < top; ++n) {
        bool mixed_ok = true;
        for (std::size_t x = 0; x < s.levels[n].size && mixed_ok; ++x) {
            for (int i = 0; i <= n && mixed_ok; ++i) {
                const std::size_t y = degen(n, i, x);
                for (int j = 0; j <= n + 1; ++j) {
                    std::size_t expect = x;
                    if (j < i)
                        expect = degen(n - 1, i - 1, face(n, j, x));
                    else if (j > i + 1)
                        expect = degen(n - 1, i, face(n, j - 1, x));
                    if (face(n + 1, j, y) != expect) {
                        mixed_ok = false;
                        break;
                    }
                }
            }
        }
        if (!mixed_ok)
            report.add("face-degeneracy identity fails at level " + std::to_string(n + 1));
        if (n + 1 < top) {
            bool degen_ok = true;
            for (std::size_t x = 0; x < s.levels[n].size && degen_ok; ++x) {
                for (int j = 0; j <= n; ++j) {
                    for (int i = 0; i <= j; ++i) {
                        if (degen(n + 1, i, degen(n, j, x)) != degen(n + 1, j + 1, degen(n, i, x)))
                            degen_ok = false;
                    }
                }
            }
            if (!degen_ok)
                report.add("s_i s_j = s_{j+1} s_i fails at level " + std::to_string(n));
        }
    }
    return report;
}

std::size_t vertex_of(const SimplicialSet& s, int n, std::size_t x, int i)
{
    return s.act(MonotoneMap{i}, n, x);
}

std::size_t spine_edge(const SimplicialSet& s, int n, std::size_t x, int i)
{
    return s.act(MonotoneMap{i, i + 1}, n, x);
}

std::size_t spine_fiber_product_size(const SimplicialSet& s, int n)
{
    if (n == 0)
        return s.levels.at(0).size;
    const auto& l1 = s.levels.at(1);
    const std::size_t v = s.levels.at(0).size;
    // ways[w] = number of chains of the current length ending at vertex w.
    std::vector<std::size_t> ways(v, 1);
    for (int k = 0; k < n; ++k) {
        std::vector<std::size_t> next(v, 0);
        for (std::size_t e = 0; e < l1.size; ++e) {
            std::size_t src = l1.faces[1][e];
            std::size_t dst = l1.faces[0][e];
            next[dst] += ways[src];
        }
        ways = std::move(next);
    }
    std::size_t total = 0;
    for (auto w : ways)
        total += w;
    return total;
}

bool segal_map_bijective(const SimplicialSet& s, int n)
{
    if (n <= 1)
        return true;
    std::set<std::vector<std::size_t>> image;
    for (std::size_t x = 0; x < s.levels.at(n).size; ++x) {
        std::vector<std::size_t> spine;
        for (int i = 0; i < n; ++i)
            spine.push_back(spine_edge(s, n, x, i));
        if (!image.insert(std::move(spine)).second)
            return false;
    }
    return image.size() == spine_fiber_product_size(s, n);
}

bool is_segal(const SimplicialSet& s)
{
    for (int n = 2; n <= static_cast<int>(s.top()); ++n) {
        if (!segal_map_bijective(s, n))
            return false;
    }
    return true;
}

SimplicialSet codiscrete(std::size_t vertex_count, int top)
{
    SimplicialSet s;
    auto power = [&](int k) {
        std::size_t p = 1;
        for (int i = 0; i < k; ++i)
            p *= vertex_count;
        return p;
    };
    auto decode = [&](std::size_t x, int n) {
        std::vector<std::size_t> w(static_cast<std::size_t>(n + 1));
        for (int i = n; i >= 0; --i) {
            w[i] = x % (vertex_count ? vertex_count : 1);
            x /= (vertex_count ? vertex_count : 1);
        }
        return w;
    };
    auto encode = [&](const std::vector<std::size_t>& w) {
        std::size_t x = 0;
        for (auto c : w)
            x = x * vertex_count + c;
        return x;
    };
    s.levels.resize(static_cast<std::size_t>(top + 1));
    for (int n = 0; n <= top; ++n) {
        auto& lv = s.levels[n];
        lv.size = power(n + 1);
        if (n > 0) {
            lv.faces.assign(n + 1, std::vector<std::size_t>(lv.size));
            for (std::size_t x = 0; x < lv.size; ++x) {
                auto w = decode(x, n);
                for (int i = 0; i <= n; ++i) {
                    auto v = w;
                    v.erase(v.begin() + i);
                    lv.faces[i][x] = encode(v);
                }
            }
        }
        if (n < top) {
            lv.degeneracies.assign(n + 1, std::vector<std::size_t>(lv.size));
            for (std::size_t x = 0; x < lv.size; ++x) {
                auto w = decode(x, n);
                for (int i = 0; i <= n; ++i) {
                    auto v = w;
                    v.insert(v.begin() + i, w[i]);
                    lv.degeneracies[i][x] = encode(v);
                }
            }
        }
    }
    return s;
}

SetDiagram to_set_diagram(const SimplicialSet& s)
{
    const int top = static_cast<int>(s.top());
    FinCategory delta = truncated_simplex_category(top);
    SetDiagram d{delta.opposite(), {}, {}};
    for (int n = 0; n <= top; ++n)
        d.sizes.push_back(s.levels[n].size);
    d.maps.resize(d.shape.morphism_count());
    // A Δ-morphism θ : [m] -> [n] is an arrow [n] -> [m] of Δ^op acting by θ^*.
    auto all_maps = [&](int m, int n) { return monotone_maps(m, n); };
    for (int m = 0; m <= top; ++m) {
        for (int n = 0; n <= top; ++n) {
            auto maps = all_maps(m, n);
            auto ids = delta.hom(m, n);
            for (std::size_t k = 0; k < maps.size(); ++k) {
                auto& table = d.maps[ids[k]];
                table.resize(s.levels[n].size);
                for (std::size_t x = 0; x < s.levels[n].size; ++x)
                    table[x] = s.act(maps[k], n, x);
            }
        }
    }
    return d;
}

namespace {

std::string sequence_name(const std::vector<std::string>& names, const std::vector<int>& w)
{
    std::string s = "[";
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i)
            s += ",";
        s += names[w[i]];
    }
    return s + "]";
}

} // namespace

FinCategory free_act(const std::vector<std::string>& vertices, int m_max)
{
    if (m_max < 1)
        throw std::invalid_argument("free_act needs m_max >= 1");
    CategoryBuilder b;
    const int v = static_cast<int>(vertices.size());
    for (const auto& name : vertices)
        b.add_object(name);
    std::map<std::vector<int>, MorphismId> id;
    std::vector<std::vector<int>> words;
    std::vector<int> cur;
    std::function<void(int)> grow = [&](int remaining) {
        MorphismId f = b.add_morphism(sequence_name(vertices, cur), cur.front(), cur.back());
        id[cur] = f;
        words.push_back(cur);
        if (cur.size() == 1)
            b.set_unit(cur.front(), f);
        if (remaining == 0)
            return;
        for (int w = 0; w < v; ++w) {
            cur.push_back(w);
            grow(remaining - 1);
            cur.pop_back();
        }
    };
    for (int w = 0; w < v; ++w) {
        cur = {w};
        grow(m_max);
    }
    for (const auto& f : words) {
        for (const auto& g : words) {
            if (f.back() != g.front())
                continue;
            if (f.size() + g.size() - 2 > static_cast<std::size_t>(m_max))
                continue;
            std::vector<int> gf = f;
            gf.insert(gf.end(), g.begin() + 1, g.end());
            b.set_composite(id.at(g), id.at(f), id.at(gf));
        }
    }
    b.set_truncation("length > " + std::to_string(m_max));
    return b.build();
}

int free_act_length(const FinCategory& c, MorphismId f)
{
    const auto& name = c.morphism_name(f);
    return static_cast<int>(std::count(name.begin(), name.end(), ','));
}

} // namespace fh::fincat
