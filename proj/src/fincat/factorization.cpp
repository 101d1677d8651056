#include "fh/fincat/factorization.hpp"

#include <stdexcept>
#include <string>

namespace fh::fincat {

std::vector<Factorization> all_factorizations(const FinCategory& c, const FactorizationSystem& fs, MorphismId f)
{
    std::vector<Factorization> out;
    for (ObjectId mid = 0; mid < static_cast<ObjectId>(c.object_count()); ++mid) {
        for (MorphismId l : c.hom(c.source(f), mid)) {
            if (!fs.left[l])
                continue;
            for (MorphismId r : c.hom(mid, c.target(f))) {
                if (!fs.right[r])
                    continue;
                Composite rl = c.compose(r, l);
                if (rl.defined() && rl.value == f)
                    out.push_back({l, r});
            }
        }
    }
    return out;
}

Factorization factorize_morphism(const FinCategory& c, const FactorizationSystem& fs, MorphismId f)
{
    auto all = all_factorizations(c, fs, f);
    if (all.empty())
        throw std::domain_error("no factorization of " + c.morphism_name(f));
    return all.front();
}

std::size_t comparison_isomorphisms(const FinCategory& c, const Factorization& a, const Factorization& b)
{
    std::size_t count = 0;
    for (MorphismId u : c.hom(c.target(a.left), c.target(b.left))) {
        if (!c.is_isomorphism(u))
            continue;
        Composite ul = c.compose(u, a.left);
        Composite ru = c.compose(b.right, u);
        if (ul.defined() && ru.defined() && ul.value == b.left && ru.value == a.right)
            ++count;
    }
    return count;
}

ValidationReport validate_factorization_system(const FinCategory& c, const FactorizationSystem& fs)
{
    ValidationReport report;
    const auto n = static_cast<MorphismId>(c.morphism_count());
    if (fs.left.size() != c.morphism_count() || fs.right.size() != c.morphism_count()) {
        report.add("class flags do not match the morphism count");
        return report;
    }
    for (MorphismId f = 0; f < n; ++f) {
        if (c.is_isomorphism(f) && !(fs.left[f] && fs.right[f]))
            report.add("isomorphism " + c.morphism_name(f) + " missing from a class");
    }
    for (auto [g, f, gf] : c.composites()) {
        if (fs.left[g] && fs.left[f] && !fs.left[gf])
            report.add("left class not closed under (" + c.morphism_name(g) + "," + c.morphism_name(f) + ")");
        if (fs.right[g] && fs.right[f] && !fs.right[gf])
            report.add("right class not closed under (" + c.morphism_name(g) + "," + c.morphism_name(f) + ")");
    }
    for (MorphismId f = 0; f < n; ++f) {
        auto all = all_factorizations(c, fs, f);
        if (all.empty()) {
            report.add("no factorization of " + c.morphism_name(f));
            continue;
        }
        for (std::size_t i = 1; i < all.size(); ++i) {
            if (comparison_isomorphisms(c, all.front(), all[i]) != 1) {
                report.add("factorizations of " + c.morphism_name(f) + " are not uniquely isomorphic");
                break;
            }
        }
    }
    return report;
}

FactorizationSystem isos_then_all(const FinCategory& c)
{
    FactorizationSystem fs;
    for (MorphismId f = 0; f < static_cast<MorphismId>(c.morphism_count()); ++f) {
        fs.left.push_back(c.is_isomorphism(f));
        fs.right.push_back(true);
    }
    return fs;
}

FactorizationSystem all_then_isos(const FinCategory& c)
{
    FactorizationSystem fs;
    for (MorphismId f = 0; f < static_cast<MorphismId>(c.morphism_count()); ++f) {
        fs.left.push_back(true);
        fs.right.push_back(c.is_isomorphism(f));
    }
    return fs;
}

} // namespace fh::fincat
