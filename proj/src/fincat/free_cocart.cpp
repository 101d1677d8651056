#include "fh/fincat/free_cocart.hpp"

#include <array>
#include <map>
#include <stdexcept>
#include <string>

namespace fh::fincat {

ValidationReport validate_functor(const FinCategory& source, const FinCategory& target, const Functor& f)
{
    ValidationReport report;
    if (f.on_objects.size() != source.object_count() || f.on_morphisms.size() != source.morphism_count()) {
        report.add("functor tables do not match the source category");
        return report;
    }
    for (MorphismId m = 0; m < static_cast<MorphismId>(source.morphism_count()); ++m) {
        MorphismId fm = f.on_morphisms[m];
        if (target.source(fm) != f.on_objects[source.source(m)] || target.target(fm) != f.on_objects[source.target(m)])
            report.add("functor does not respect the endpoints of " + source.morphism_name(m));
    }
    for (ObjectId x = 0; x < static_cast<ObjectId>(source.object_count()); ++x) {
        if (f.on_morphisms[source.unit(x)] != target.unit(f.on_objects[x]))
            report.add("functor does not preserve the unit of " + source.object_name(x));
    }
    for (auto [g, h, gh] : source.composites()) {
        Composite image = target.compose(f.on_morphisms[g], f.on_morphisms[h]);
        if (!image.defined() || image.value != f.on_morphisms[gh])
            report.add("functor does not preserve (" + source.morphism_name(g) + "," + source.morphism_name(h) + ")");
    }
    return report;
}

bool is_cocartesian(const FinCategory& total, const FinCategory& base, const Functor& p, MorphismId m)
{
    const ObjectId x = total.source(m);
    const ObjectId y = total.target(m);
    const MorphismId pm = p.on_morphisms[m];
    for (ObjectId z = 0; z < static_cast<ObjectId>(total.object_count()); ++z) {
        for (MorphismId psi : total.hom(x, z)) {
            for (MorphismId k : base.hom(p.on_objects[y], p.on_objects[z])) {
                Composite kpm = base.compose(k, pm);
                if (!kpm.defined() || kpm.value != p.on_morphisms[psi])
                    continue;
                int solutions = 0;
                for (MorphismId chi : total.hom(y, z)) {
                    if (p.on_morphisms[chi] != k)
                        continue;
                    Composite chim = total.compose(chi, m);
                    if (chim.defined() && chim.value == psi)
                        ++solutions;
                }
                if (solutions != 1)
                    return false;
            }
        }
    }
    return true;
}

FreeCocartesian free_cocart_second_factor(const FinCategory& e, const FinCategory& b, const Functor& p,
                                          const FactorizationSystem& fs)
{
    ValidationReport report = validate_functor(e, b, p);
    report.merge(validate_factorization_system(b, fs));
    if (!report.ok())
        throw ValidationError(report);

    FreeCocartesian out;
    CategoryBuilder builder;
    std::map<std::pair<ObjectId, MorphismId>, ObjectId> object_id;
    for (ObjectId x = 0; x < static_cast<ObjectId>(e.object_count()); ++x) {
        for (ObjectId bo = 0; bo < static_cast<ObjectId>(b.object_count()); ++bo) {
            for (MorphismId beta : b.hom(p.on_objects[x], bo)) {
                if (!fs.right[beta])
                    continue;
                ObjectId id = builder.add_object("(" + e.object_name(x) + "," + b.morphism_name(beta) + ")");
                object_id[{x, beta}] = id;
                out.objects.push_back({x, beta});
                out.projection.on_objects.push_back(bo);
            }
        }
    }
    std::vector<std::vector<MorphismId>> by_source(out.objects.size());
    for (ObjectId s = 0; s < static_cast<ObjectId>(out.objects.size()); ++s) {
        auto [x, beta] = out.objects[s];
        for (ObjectId t = 0; t < static_cast<ObjectId>(out.objects.size()); ++t) {
            auto [x2, beta2] = out.objects[t];
            for (MorphismId eps : e.hom(x, x2)) {
                for (MorphismId g : b.hom(b.target(beta), b.target(beta2))) {
                    Composite lhs = b.compose(beta2, p.on_morphisms[eps]);
                    Composite rhs = b.compose(g, beta);
                    if (!lhs.defined() || !rhs.defined() || lhs.value != rhs.value)
                        continue;
                    MorphismId id =
                        builder.add_morphism("(" + e.morphism_name(eps) + "," + b.morphism_name(g) + ")", s, t);
                    out.morphisms.push_back({eps, g});
                    out.projection.on_morphisms.push_back(g);
                    by_source[s].push_back(id);
                    if (e.is_identity(eps) && b.is_identity(g))
                        builder.set_unit(s, id);
                }
            }
        }
    }
    FinCategory skeleton = builder.build_unchecked();
    std::map<std::array<int, 4>, MorphismId> lookup;
    for (MorphismId m = 0; m < static_cast<MorphismId>(skeleton.morphism_count()); ++m)
        lookup[{skeleton.source(m), skeleton.target(m), out.morphisms[m].first, out.morphisms[m].second}] = m;
    // (ε2, g2) ∘ (ε1, g1) = (ε2∘ε1, g2∘g1)
    for (MorphismId f = 0; f < static_cast<MorphismId>(skeleton.morphism_count()); ++f) {
        for (MorphismId h : by_source[skeleton.target(f)]) {
            auto [eps1, g1] = out.morphisms[f];
            auto [eps2, g2] = out.morphisms[h];
            MorphismId eps = e.compose_or_throw(eps2, eps1);
            MorphismId g = b.compose_or_throw(g2, g1);
            builder.set_composite(h, f, lookup.at({skeleton.source(f), skeleton.target(h), eps, g}));
        }
    }
    out.total = builder.build();
    return out;
}

CocartesianLift cocartesian_lift(const FreeCocartesian& fc, const FinCategory& e, const FinCategory& b,
                                 const Functor& p, const FactorizationSystem& fs, ObjectId object, MorphismId g)
{
    auto [x, beta] = fc.objects.at(object);
    Factorization square = factorize_morphism(b, fs, b.compose_or_throw(g, beta));
    MorphismId eps = -1;
    for (ObjectId x2 = 0; x2 < static_cast<ObjectId>(e.object_count()) && eps < 0; ++x2) {
        for (MorphismId cand : e.hom(x, x2)) {
            if (p.on_morphisms[cand] == square.left && is_cocartesian(e, b, p, cand)) {
                eps = cand;
                break;
            }
        }
    }
    if (eps < 0)
        throw std::domain_error("no cocartesian lift of " + b.morphism_name(square.left) + " at " + e.object_name(x));
    for (ObjectId t = 0; t < static_cast<ObjectId>(fc.objects.size()); ++t) {
        if (fc.objects[t] != std::make_pair(e.target(eps), square.right))
            continue;
        for (MorphismId m : fc.total.hom(object, t)) {
            if (fc.morphisms[m] == std::make_pair(eps, g))
                return {m, square};
        }
    }
    throw std::logic_error("lift square missing from the free cocartesian category");
}

} // namespace fh::fincat
