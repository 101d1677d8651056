#include "fh/checks/suites.hpp"

#include <functional>
#include <map>
#include <random>
#include <stdexcept>

#include "fh/cyclo/cyclo.hpp"
#include "fh/enrich/catalog.hpp"
#include "fh/enrich/corr.hpp"
#include "fh/facthom/disk.hpp"
#include "fh/facthom/hochschild.hpp"
#include "fh/facthom/trace.hpp"
#include "fh/fincat/factorization.hpp"
#include "fh/fincat/simplicial.hpp"
#include "fh/indexing/paracyclic.hpp"
#include "fh/indexing/refinement.hpp"
#include "fh/indexing/simplex.hpp"
#include "fh/manifold/span.hpp"

namespace fh::checks {

namespace {

class Recorder {
public:
    explicit Recorder(std::string suite) { result_.suite = std::move(suite); }

    void expect(bool ok, const std::string& what)
    {
        if (ok) {
            ++result_.passed;
            return;
        }
        ++result_.failed;
        if (result_.failures.size() < 20)
            result_.failures.push_back(what);
    }

    SuiteResult take() { return std::move(result_); }

private:
    SuiteResult result_;
};

using manifold::GraphManifold;
using manifold::StratMorphism;

GraphManifold random_graph(std::mt19937& rng, int max_vertices, int max_edges)
{
    GraphManifold g;
    const int nv = std::uniform_int_distribution<int>(1, max_vertices)(rng);
    for (int v = 0; v < nv; ++v)
        g.vertices.push_back("v" + std::to_string(v));
    const int ne = std::uniform_int_distribution<int>(0, max_edges)(rng);
    std::uniform_int_distribution<int> pick(0, nv - 1);
    for (int e = 0; e < ne; ++e)
        g.edges.push_back({"e" + std::to_string(e), pick(rng), pick(rng)});
    return g;
}

// Directed walks of length ≤ max_length from a to b (the empty walk when a = b).
std::vector<std::vector<int>> walks(const GraphManifold& g, int a, int b, int max_length)
{
    std::vector<std::vector<int>> out;
    std::vector<int> current;
    auto extend = [&](auto&& self, int at) -> void {
        if (at == b)
            out.push_back(current);
        if (static_cast<int>(current.size()) == max_length)
            return;
        for (int e = 0; e < g.edge_count(); ++e) {
            if (g.edges[e].src != at)
                continue;
            current.push_back(e);
            self(self, g.edges[e].dst);
            current.pop_back();
        }
    };
    extend(extend, a);
    return out;
}

StratMorphism random_morphism_from(const GraphManifold& source, std::mt19937& rng, int max_edges)
{
    StratMorphism m{source, {}, {}, {}, {}};
    const int nv = std::uniform_int_distribution<int>(1, 4)(rng);
    std::uniform_int_distribution<int> pick_source(0, source.vertex_count() - 1);
    for (int i = 0; i < nv; ++i) {
        m.target.vertices.push_back("w" + std::to_string(i));
        m.vertex_map.push_back(pick_source(rng));
    }
    std::uniform_int_distribution<int> pick_target(0, nv - 1);
    for (int attempt = 0; attempt < 12 && m.target.edge_count() < max_edges; ++attempt) {
        const int u = pick_target(rng), w = pick_target(rng);
        auto options = walks(source, m.vertex_map[u], m.vertex_map[w], 3);
        if (options.empty())
            continue;
        m.target.edges.push_back({"f" + std::to_string(m.target.edge_count()), u, w});
        m.edge_paths.push_back(options[rng() % options.size()]);
    }
    return m;
}

indexing::ParacyclicOp random_op(std::mt19937& rng, int m, int n)
{
    indexing::ParacyclicOp f{m, n, {}};
    std::int64_t start = std::uniform_int_distribution<int>(-2 * (n + 1), 2 * (n + 1))(rng);
    std::vector<std::int64_t> steps;
    for (int i = 0; i < m; ++i)
        steps.push_back(std::uniform_int_distribution<int>(0, n + 1)(rng));
    std::sort(steps.begin(), steps.end());
    f.values.push_back(start);
    for (auto s : steps)
        f.values.push_back(start + s);
    return f;
}

manifold::FinSpan random_span(std::mt19937& rng, std::size_t s, std::size_t t, std::size_t apex)
{
    manifold::FinSpan out{s, t, {}, {}};
    for (std::size_t u = 0; u < apex; ++u) {
        out.left.push_back(rng() % s);
        out.right.push_back(rng() % t);
    }
    return out;
}

std::vector<enrich::SetEnrichedCategory> sample_categories()
{
    return {enrich::walking_idempotent(),
            enrich::delooping(enrich::cyclic_group(2)),
            enrich::delooping(enrich::cyclic_group(4)),
            enrich::delooping(enrich::symmetric_group3()),
            enrich::poset(2, {{0, 1}}),
            enrich::poset(3, {{0, 1}, {1, 2}}),
            enrich::poset(3, {{0, 2}, {1, 2}})};
}

void fincat_suite(Recorder& rec, std::mt19937&)
{
    for (const auto& c : sample_categories()) {
        const auto& cat = c.cat;
        rec.expect(fincat::validate_axioms(cat).ok(), "axioms of " + cat.object_name(0));
        rec.expect(fincat::validate_factorization_system(cat, fincat::isos_then_all(cat)).ok(),
                   "isos-then-all factorization system");
        if (!cat.truncation()) {
            auto y = enrich::nerve(c, 3);
            rec.expect(fincat::validate_simplicial(y).ok(), "nerve simplicial identities");
            rec.expect(fincat::is_segal(y), "nerve Segal condition");
        }
    }
    for (int top = 1; top <= 3; ++top) {
        auto delta = fincat::truncated_simplex_category(top);
        rec.expect(fincat::validate_axioms(delta).ok(), "truncated simplex category axioms");
    }
    auto y = fincat::codiscrete(3, 4);
    rec.expect(fincat::is_segal(y), "codiscrete Segal");
    for (int n = 1; n <= 4; ++n)
        rec.expect(fincat::spine_fiber_product_size(y, n) == y.levels[n].size, "codiscrete spine count");
}

void manifold_suite(Recorder& rec, std::mt19937& rng)
{
    using namespace manifold;
    for (int trial = 0; trial < 150; ++trial) {
        auto m = random_graph(rng, 3, 4);
        auto f = random_morphism_from(m, rng, 4);
        auto g = random_morphism_from(f.target, rng, 4);
        auto h = random_morphism_from(g.target, rng, 4);
        rec.expect(validate_morphism(f).ok(), "generated morphism is valid");
        auto gf = compose_morphisms(f, g);
        rec.expect(validate_morphism(gf).ok(), "composite is valid");
        rec.expect(same_morphism(compose_morphisms(gf, h), compose_morphisms(f, compose_morphisms(g, h))),
                   "associativity");
        rec.expect(same_morphism(compose_morphisms(identity(f.source), f), f), "left identity");
        rec.expect(span_isomorphic(strata_span(gf), compose_spans(strata_span(f), strata_span(g))),
                   "strata spans are functorial");
        auto [closed, active] = factor_closed_active(f);
        rec.expect(is_closed(closed) && is_active(active), "closed-active classes");
        rec.expect(same_morphism(compose_morphisms(closed, active), f), "closed-active recomposes");
        auto [cre, ref] = factor_creation_refinement(active);
        rec.expect(is_creation(cre) && is_refinement(ref), "creation-refinement classes");
        rec.expect(same_morphism(compose_morphisms(cre, ref), active), "creation-refinement recomposes");
        auto [bl, b] = blowup(m);
        rec.expect(is_creation(b), "blowup is a creation");
        rec.expect(validate_manifold(bl).ok(), "blowup is a manifold");
    }
}

void indexing_suite(Recorder& rec, std::mt19937& rng)
{
    using namespace indexing;
    for (int m = 0; m <= 4; ++m) {
        for (int n = 0; n <= 4; ++n) {
            for (const auto& values : fincat::monotone_maps(m, n)) {
                SimplexMap f{m, n, values};
                auto [a, c] = delta_op_factorize(f);
                rec.expect(is_active(a) && is_closed(c) && compose(c, a) == f, "Δ active-closed factorization");
            }
        }
    }
    for (int trial = 0; trial < 200; ++trial) {
        int a = rng() % 6, b = rng() % 6, c = rng() % 6, d = rng() % 6;
        auto f = random_op(rng, a, b);
        auto g = random_op(rng, b, c);
        auto h = random_op(rng, c, d);
        rec.expect(is_valid(f), "random paracyclic operator is valid");
        rec.expect(paracyclic_compose(h, paracyclic_compose(g, f)) ==
                       paracyclic_compose(paracyclic_compose(h, g), f),
                   "paracyclic associativity");
        rec.expect(paracyclic_compose(f, rotation(a, a + 1)) == paracyclic_compose(rotation(b, b + 1), f),
                   "τ^{n+1} is central");
        rec.expect(cyclic_reduce(paracyclic_compose(g, f)) ==
                       cyclic_reduce(paracyclic_compose(cyclic_reduce(g), cyclic_reduce(f))),
                   "cyclic quotient is a functor");
    }
    for (int n = 0; n <= 4; ++n) {
        rec.expect(cyclic_reduce(rotation(n, n + 1)) == paracyclic_identity(n), "τ^{n+1} trivial in Λ");
        for (int r = 1; r <= 4; ++r)
            rec.expect(cover_operator(r).level(n) + 1 == r * (n + 1), "cover point count");
    }
    for (int trial = 0; trial < 30; ++trial) {
        auto g = random_graph(rng, 3, 3);
        auto d = disk_refinement_category(g);
        std::vector<int> levels;
        for (std::size_t i = 0; i < d.level_count(); ++i)
            levels.push_back(rng() % 3);
        auto r = realize_refinement(d, levels);
        rec.expect(manifold::is_refinement(r), "realized refinement");
        rec.expect(terminal_reconstruction(d) == g, "terminal reconstruction");
    }
}

void corr_suite(Recorder& rec, std::mt19937& rng)
{
    for (int trial = 0; trial < 300; ++trial) {
        std::size_t s = 1 + rng() % 3, t = 1 + rng() % 3, r = 1 + rng() % 3;
        auto a = random_span(rng, s, t, rng() % 4);
        auto b = random_span(rng, t, r, rng() % 4);
        std::vector<std::size_t> family(s);
        for (auto& v : family)
            v = rng() % 4;
        auto w = enrich::pushforward_witness(a, b, family);
        rec.expect(enrich::witness_valid(a, b, family, w), "pushforward along a composite span");
        enrich::PointedMap f(s);
        for (auto& x : f)
            if (rng() % 4)
                x = rng() % t;
        rec.expect(enrich::corr_pushforward(enrich::span_of_pointed_map(f, t), family).values ==
                       enrich::pointed_monodromy(f, t, family),
                   "pointed maps agree with their spans");
    }
    for (std::size_t n = 0; n <= 3; ++n) {
        std::vector<std::size_t> family(n, 3);
        rec.expect(enrich::corr_pushforward(manifold::identity_span(n), family).values == family,
                   "identity span");
    }
}

void facthom_suite(Recorder& rec, std::mt19937& rng)
{
    for (int i = 0; i < 20; ++i) {
        auto a = enrich::random_algebra(rng, 3);
        if (!enrich::validate_enriched_cat(a).ok()) {
            rec.expect(false, "sample algebra is associative");
            continue;
        }
        facthom::CyclicBar bar(a);
        for (int n = 0; n <= 2; ++n) {
            rec.expect((bar.boundary(n + 1) * bar.boundary(n + 2)).is_zero(a.ring()), "b∘b = 0");
            rec.expect((bar.connes_B(n + 1) * bar.connes_B(n)).is_zero(a.ring()), "B∘B = 0");
            auto anti = bar.boundary(n + 1) * bar.connes_B(n);
            if (n > 0)
                anti = anti + bar.connes_B(n - 1) * bar.boundary(n);
            rec.expect(anti.is_zero(a.ring()), "bB + Bb = 0");
        }
    }
    for (const auto& c : sample_categories()) {
        auto y = enrich::nerve(c, 4);
        for (int n = 0; n <= 4; ++n)
            rec.expect(facthom::cart_facthom_disk(manifold::chain(n), y).size() == y.levels[n].size,
                       "⟨n⟩ evaluates to level n");
        for (int trial = 0; trial < 10; ++trial) {
            auto r = random_graph(rng, 3, 3);
            rec.expect(facthom::cart_facthom_disk(r, y).size() == facthom::enr_facthom_disk(r, c).size(),
                       "enriched and cartesian evaluation agree");
        }
        auto table = facthom::thh_set_pi0(c.cat);
        std::size_t count = 0;
        facthom::thh_set_pi0_coequalizer(c.cat, &count);
        rec.expect(count == table.classes.size(), "trace classes match the coequalizer");
    }
}

void cyclo_suite(Recorder& rec, std::mt19937&)
{
    for (const auto& c : sample_categories()) {
        auto table = facthom::thh_set_pi0(c.cat);
        for (int r = 1; r <= 4; ++r) {
            auto pr = cyclo::psi_r(c.cat, table, r);
            rec.expect(pr.well_defined, "ψ_r is well defined");
            for (int s = 1; s <= 4; ++s) {
                auto ps = cyclo::psi_r(c.cat, table, s);
                auto prs = cyclo::psi_r(c.cat, table, r * s);
                bool law = true;
                for (std::size_t k = 0; k < table.classes.size(); ++k)
                    law = law && pr.image[*ps.image[k]] == prs.image[k];
                rec.expect(law, "ψ_r ψ_s = ψ_rs");
            }
        }
        auto t = cyclo::tc0(c.cat, table);
        for (auto k : cyclo::trace0(c.cat, table))
            rec.expect(std::find(t.fixed.begin(), t.fixed.end(), k) != t.fixed.end(), "trace lands in tc0");
    }
    for (const auto& g : {enrich::cyclic_group(4), enrich::symmetric_group3(), enrich::quaternion_group()}) {
        auto census = cyclo::free_loop_census(g);
        auto table = facthom::thh_set_pi0(enrich::delooping(g).cat);
        rec.expect(census.class_count == table.classes.size(), "free loop census matches trace classes");
    }
    auto f = enrich::free_monoid(2, 6);
    auto table = facthom::thh_set_pi0(f.cat);
    auto census = cyclo::configuration_census(2, 6);
    std::vector<std::size_t> by_length(7, 0);
    for (const auto& cls : table.classes) {
        const auto& rep = f.cat.morphism_name(cls.rep);
        ++by_length[rep == "1" ? 0 : rep.size()];
    }
    rec.expect(by_length == census, "free monoid trace classes are necklaces");
}

const std::map<std::string, std::function<void(Recorder&, std::mt19937&)>>& registry()
{
    static const std::map<std::string, std::function<void(Recorder&, std::mt19937&)>> suites = {
        {"fincat", fincat_suite}, {"manifold", manifold_suite}, {"indexing", indexing_suite},
        {"corr", corr_suite},     {"facthom", facthom_suite},   {"cyclo", cyclo_suite}};
    return suites;
}

} // namespace

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names = {"fincat", "manifold", "indexing", "corr", "facthom", "cyclo"};
    return names;
}

SuiteResult run_suite(const std::string& name, unsigned seed)
{
    auto it = registry().find(name);
    if (it == registry().end())
        throw std::invalid_argument("unknown suite " + name);
    Recorder rec(name);
    std::mt19937 rng(seed);
    try {
        it->second(rec, rng);
    } catch (const std::exception& e) {
        rec.expect(false, std::string("suite aborted: ") + e.what());
    }
    return rec.take();
}

nlohmann::json to_json(const SuiteResult& r)
{
    return {{"suite", r.suite}, {"passed", r.passed}, {"failed", r.failed}, {"failures", r.failures}};
}

} // namespace fh::checks
