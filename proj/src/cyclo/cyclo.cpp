#include "fh/cyclo/cyclo.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace fh::cyclo {

using fincat::MorphismId;
using fincat::ObjectId;

namespace {

std::optional<MorphismId> power(const fincat::FinCategory& c, MorphismId g, int r)
{
    MorphismId out = g;
    for (int i = 1; i < r; ++i) {
        auto next = c.compose(g, out);
        if (!next.defined())
            return std::nullopt;
        out = next.value;
    }
    return out;
}

} // namespace

ClassMap psi_r(const fincat::FinCategory& c, const facthom::TraceClassTable& table, int r)
{
    if (r < 1)
        throw std::invalid_argument("ψ_r needs r >= 1");
    ClassMap out;
    out.image.resize(table.classes.size());
    for (std::size_t k = 0; k < table.classes.size(); ++k) {
        for (MorphismId g : table.classes[k].members) {
            auto p = power(c, g, r);
            if (!p)
                continue;
            const std::size_t cls = *table.class_of[*p];
            if (!out.image[k])
                out.image[k] = cls;
            else if (*out.image[k] != cls)
                out.well_defined = false;
        }
    }
    return out;
}

CycloAction cyclo_action(const fincat::FinCategory& c, const std::vector<int>& degrees)
{
    CycloAction a{facthom::thh_set_pi0(c), {}};
    for (int r : degrees)
        a.psi.emplace(r, psi_r(c, a.table, r));
    return a;
}

Tc0 tc0(const fincat::FinCategory& c, const facthom::TraceClassTable& table, const std::vector<int>& degrees)
{
    Tc0 out;
    out.degrees = degrees;
    std::vector<ClassMap> maps;
    for (int r : degrees)
        maps.push_back(psi_r(c, table, r));
    for (std::size_t k = 0; k < table.classes.size(); ++k) {
        bool moved = false, unknown = false;
        for (const auto& m : maps) {
            if (!m.image[k])
                unknown = true;
            else if (*m.image[k] != k)
                moved = true;
        }
        if (moved)
            continue;
        (unknown ? out.undetermined : out.fixed).push_back(k);
    }
    return out;
}

std::vector<std::size_t> trace0(const fincat::FinCategory& c, const facthom::TraceClassTable& table)
{
    std::vector<std::size_t> out;
    for (ObjectId x = 0; x < static_cast<ObjectId>(c.object_count()); ++x)
        out.push_back(*table.class_of[c.unit(x)]);
    return out;
}

nlohmann::json to_json(const Tc0& t, const fincat::FinCategory& c, const facthom::TraceClassTable& table)
{
    nlohmann::json fixed = nlohmann::json::array(), undetermined = nlohmann::json::array();
    for (auto k : t.fixed)
        fixed.push_back(c.morphism_name(table.classes[k].rep));
    for (auto k : t.undetermined)
        undetermined.push_back(c.morphism_name(table.classes[k].rep));
    return {{"tc0", fixed}, {"undetermined", undetermined}, {"degrees", t.degrees}, {"model", t.model}};
}

nlohmann::json trace_to_json(const std::vector<std::size_t>& trace, const fincat::FinCategory& c,
                             const facthom::TraceClassTable& table)
{
    nlohmann::json map = nlohmann::json::object();
    for (ObjectId x = 0; x < static_cast<ObjectId>(trace.size()); ++x)
        map[c.object_name(x)] = c.morphism_name(table.classes[trace[x]].rep);
    return {{"trace", map}, {"model", "strict-pi0"}};
}

FreeLoopCensus free_loop_census(const enrich::GroupTable& g)
{
    const int n = static_cast<int>(g.size());
    std::vector<int> inverse(n, -1);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (g[a][b] == 0)
                inverse[a] = b;
    FreeLoopCensus out;
    std::vector<bool> done(n, false);
    for (int x = 0; x < n; ++x) {
        if (done[x])
            continue;
        std::set<int> cls;
        std::size_t centralizer = 0;
        for (int h = 0; h < n; ++h) {
            const int y = g[g[h][x]][inverse[h]];
            cls.insert(y);
            done[y] = true;
            centralizer += y == x;
        }
        out.classes.emplace_back(cls.begin(), cls.end());
        out.centralizer_orders.push_back(centralizer);
    }
    out.class_count = out.classes.size();
    return out;
}

std::string least_rotation(const std::string& word)
{
    std::string best = word;
    for (std::size_t k = 1; k < word.size(); ++k) {
        std::string r = word.substr(k) + word.substr(0, k);
        if (r < best)
            best = std::move(r);
    }
    return best;
}

std::vector<std::size_t> configuration_census(std::size_t m, std::size_t n_max)
{
    if (m < 1)
        throw std::invalid_argument("configuration census needs at least one label");
    std::vector<std::size_t> counts(n_max + 1, 0);
    counts[0] = 1;
    for (std::size_t n = 1; n <= n_max; ++n) {
        std::vector<std::size_t> digits(n, 0);
        std::string word(n, 'a');
        for (;;) {
            for (std::size_t i = 0; i < n; ++i)
                word[i] = static_cast<char>('a' + digits[i]);
            if (least_rotation(word) == word)
                ++counts[n];
            std::size_t i = n;
            while (i > 0 && digits[i - 1] == m - 1)
                digits[--i] = 0;
            if (i == 0)
                break;
            ++digits[i - 1];
        }
    }
    return counts;
}

} // namespace fh::cyclo
