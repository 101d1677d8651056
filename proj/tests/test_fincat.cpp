#include <doctest.h>

#include <algorithm>
#include <functional>
#include <random>
#include <set>

#include "fh/fincat/category.hpp"
#include "fh/fincat/factorization.hpp"
#include "fh/fincat/free_cocart.hpp"
#include "fh/fincat/json.hpp"
#include "fh/fincat/set_diagram.hpp"
#include "fh/fincat/simplicial.hpp"

using namespace fh::fincat;

namespace {

CategoryTable idempotent_table()
{
    CategoryTable t;
    t.objects = {"x"};
    t.homs[{"x", "x"}] = {"id", "phi"};
    t.units["x"] = "id";
    t.compose[{"phi", "phi"}] = "phi";
    return t;
}

MorphismId named(const FinCategory& c, const std::string& name)
{
    auto m = c.find_morphism(name);
    REQUIRE(m.has_value());
    return *m;
}

// Connected components of the element graph, by depth-first search.
std::size_t brute_colimit_size(const SetDiagram& d)
{
    std::vector<std::pair<int, std::size_t>> nodes;
    std::map<std::pair<int, std::size_t>, std::size_t> index;
    for (int x = 0; x < static_cast<int>(d.sizes.size()); ++x) {
        for (std::size_t i = 0; i < d.sizes[x]; ++i) {
            index[{x, i}] = nodes.size();
            nodes.push_back({x, i});
        }
    }
    std::vector<std::vector<std::size_t>> adj(nodes.size());
    for (MorphismId f = 0; f < static_cast<MorphismId>(d.shape.morphism_count()); ++f) {
        for (std::size_t i = 0; i < d.sizes[d.shape.source(f)]; ++i) {
            std::size_t a = index[{d.shape.source(f), i}];
            std::size_t b = index[{d.shape.target(f), d.maps[f][i]}];
            adj[a].push_back(b);
            adj[b].push_back(a);
        }
    }
    std::vector<bool> seen(nodes.size());
    std::size_t components = 0;
    for (std::size_t s = 0; s < nodes.size(); ++s) {
        if (seen[s])
            continue;
        ++components;
        std::vector<std::size_t> stack{s};
        seen[s] = true;
        while (!stack.empty()) {
            std::size_t v = stack.back();
            stack.pop_back();
            for (std::size_t w : adj[v]) {
                if (!seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
            }
        }
    }
    return components;
}

// Every point of the product, filtered by every morphism.
std::size_t brute_limit_size(const SetDiagram& d)
{
    std::size_t count = 0;
    std::vector<std::size_t> point(d.sizes.size());
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
        if (k == point.size()) {
            for (MorphismId f = 0; f < static_cast<MorphismId>(d.shape.morphism_count()); ++f) {
                if (d.maps[f][point[d.shape.source(f)]] != point[d.shape.target(f)])
                    return;
            }
            ++count;
            return;
        }
        for (std::size_t i = 0; i < d.sizes[k]; ++i) {
            point[k] = i;
            rec(k + 1);
        }
    };
    rec(0);
    return count;
}

// Shapes with no composites besides identities, so any tables are functorial.
FinCategory zigzag_shape()
{
    CategoryBuilder b;
    std::vector<ObjectId> x;
    for (int i = 0; i < 4; ++i)
        x.push_back(b.add_object("z" + std::to_string(i)));
    for (int i = 0; i < 4; ++i)
        b.add_identity(x[i], "id_z" + std::to_string(i));
    b.add_morphism("u", x[0], x[1]);
    b.add_morphism("v", x[2], x[1]);
    b.add_morphism("w", x[2], x[3]);
    return b.build();
}

SetDiagram random_diagram(const FinCategory& shape, std::mt19937& rng)
{
    SetDiagram d{shape, {}, {}};
    std::uniform_int_distribution<std::size_t> size(0, 4);
    for (std::size_t x = 0; x < shape.object_count(); ++x)
        d.sizes.push_back(size(rng));
    // Nonempty sources need nonempty targets.
    for (MorphismId f = 0; f < static_cast<MorphismId>(shape.morphism_count()); ++f) {
        if (d.sizes[shape.source(f)] > 0 && d.sizes[shape.target(f)] == 0)
            d.sizes[shape.target(f)] = 1;
    }
    d.maps.resize(shape.morphism_count());
    for (MorphismId f = 0; f < static_cast<MorphismId>(shape.morphism_count()); ++f) {
        auto& table = d.maps[f];
        for (std::size_t i = 0; i < d.sizes[shape.source(f)]; ++i) {
            if (shape.is_identity(f))
                table.push_back(i);
            else
                table.push_back(std::uniform_int_distribution<std::size_t>(0, d.sizes[shape.target(f)] - 1)(rng));
        }
    }
    return d;
}

SimplicialSet poset_nerve_01()
{
    // Chains of {0<1}: level 0 {0,1}; level 1 {00,01,11}; level 2 {000,001,011,111}.
    SimplicialSet s;
    s.levels.resize(3);
    s.levels[0].size = 2;
    s.levels[0].degeneracies = {{0, 2}};
    s.levels[1].size = 3;
    s.levels[1].faces = {{0, 1, 1}, {0, 0, 1}};
    s.levels[1].degeneracies = {{0, 1, 3}, {0, 2, 3}};
    s.levels[2].size = 4;
    s.levels[2].faces = {{0, 1, 2, 2}, {0, 1, 1, 2}, {0, 0, 1, 2}};
    return s;
}

FactorizationSystem active_closed(const FinCategory& delta)
{
    FactorizationSystem fs{std::vector<bool>(delta.morphism_count()), std::vector<bool>(delta.morphism_count())};
    for (MorphismId f = 0; f < static_cast<MorphismId>(delta.morphism_count()); ++f) {
        const std::string& name = delta.morphism_name(f);
        int m = std::stoi(name.substr(1));
        int n = std::stoi(name.substr(name.find('>') + 1));
        std::vector<int> v;
        std::string rest = name.substr(name.find(']') + 1);
        for (std::size_t p = 0; p < rest.size();) {
            std::size_t q = rest.find(',', p);
            v.push_back(std::stoi(rest.substr(p, q - p)));
            p = q == std::string::npos ? rest.size() : q + 1;
        }
        REQUIRE(static_cast<int>(v.size()) == m + 1);
        fs.left[f] = v.front() == 0 && v.back() == n;
        bool interval = true;
        for (int i = 0; i <= m; ++i)
            interval = interval && v[i] == v[0] + i;
        fs.right[f] = interval;
    }
    return fs;
}

// All pairs of morphism classes containing the identities that pass validation.
std::vector<FactorizationSystem> all_factorization_systems(const FinCategory& c)
{
    std::vector<MorphismId> free;
    for (MorphismId f = 0; f < static_cast<MorphismId>(c.morphism_count()); ++f) {
        if (!c.is_isomorphism(f))
            free.push_back(f);
    }
    std::vector<FactorizationSystem> out;
    const std::size_t k = free.size();
    for (std::size_t lm = 0; lm < (std::size_t{1} << k); ++lm) {
        for (std::size_t rm = 0; rm < (std::size_t{1} << k); ++rm) {
            FactorizationSystem fs{std::vector<bool>(c.morphism_count()), std::vector<bool>(c.morphism_count())};
            for (MorphismId f = 0; f < static_cast<MorphismId>(c.morphism_count()); ++f) {
                fs.left[f] = c.is_isomorphism(f);
                fs.right[f] = c.is_isomorphism(f);
            }
            for (std::size_t i = 0; i < k; ++i) {
                fs.left[free[i]] = (lm >> i) & 1;
                fs.right[free[i]] = (rm >> i) & 1;
            }
            if (validate_factorization_system(c, fs).ok())
                out.push_back(fs);
        }
    }
    return out;
}

FinCategory chain_category(int n)
{
    CategoryBuilder b;
    for (int i = 0; i <= n; ++i)
        b.add_object(std::to_string(i));
    std::map<std::pair<int, int>, MorphismId> arrow;
    for (int i = 0; i <= n; ++i) {
        for (int j = i; j <= n; ++j) {
            arrow[{i, j}] = b.add_morphism(std::to_string(i) + "<=" + std::to_string(j), i, j);
            if (i == j)
                b.set_unit(i, arrow[{i, j}]);
        }
    }
    for (int i = 0; i <= n; ++i) {
        for (int j = i; j <= n; ++j) {
            for (int k = j; k <= n; ++k)
                b.set_composite(arrow[{j, k}], arrow[{i, j}], arrow[{i, k}]);
        }
    }
    return b.build();
}

Functor identity_functor(const FinCategory& c)
{
    Functor f;
    for (ObjectId x = 0; x < static_cast<ObjectId>(c.object_count()); ++x)
        f.on_objects.push_back(x);
    for (MorphismId m = 0; m < static_cast<MorphismId>(c.morphism_count()); ++m)
        f.on_morphisms.push_back(m);
    return f;
}

} // namespace

TEST_CASE("one-object categories")
{
    CategoryTable trivial;
    trivial.objects = {"x"};
    trivial.homs[{"x", "x"}] = {"id"};
    trivial.units["x"] = "id";
    CHECK(validate_category(trivial).ok());

    CHECK(validate_category(idempotent_table()).ok());
    FinCategory idem = FinCategory::from_table(idempotent_table());
    CHECK(idem.morphism_count() == 2);
    CHECK_FALSE(idem.is_isomorphism(named(idem, "phi")));

    CategoryTable broken = idempotent_table();
    broken.compose.clear();
    auto report = validate_category(broken);
    REQUIRE_FALSE(report.ok());
    CHECK(std::count(report.violations.begin(), report.violations.end(), "missing composite (phi,phi)") == 1);
    CHECK_THROWS_AS(FinCategory::from_table(broken), fh::ValidationError);
}

TEST_CASE("structural problems are reported")
{
    CategoryTable t = idempotent_table();
    t.homs[{"x", "y"}] = {"f"};
    t.compose[{"phi", "g"}] = "phi";
    auto report = validate_category(t);
    CHECK(report.violations.size() >= 2);

    CategoryTable assoc;
    assoc.objects = {"x"};
    assoc.homs[{"x", "x"}] = {"id", "a", "b"};
    assoc.units["x"] = "id";
    // a*a = b, a*b = a, b*a = b, b*b = b is not associative: (a*a)*a = b*a = b, a*(a*a) = a*b = a.
    assoc.compose[{"a", "a"}] = "b";
    assoc.compose[{"a", "b"}] = "a";
    assoc.compose[{"b", "a"}] = "b";
    assoc.compose[{"b", "b"}] = "b";
    auto r = validate_category(assoc);
    REQUIRE_FALSE(r.ok());
    CHECK(r.violations.front().find("associativity") != std::string::npos);
}

TEST_CASE("category json round trip")
{
    auto doc = nlohmann::json::parse(R"({"objects":["x"],"homs":{"x->x":["id","phi"]},
        "compose":{"phi*phi":"phi"},"units":{"x":"id"}})");
    CategoryTable t = category_table_from_json(doc);
    CHECK(t.compose.at({"phi", "phi"}) == "phi");
    FinCategory c = FinCategory::from_table(t);
    CategoryTable back = category_table_from_json(to_json(c.to_table()));
    CHECK(FinCategory::from_table(back).morphism_count() == 2);
    CHECK_THROWS_AS(category_table_from_json(nlohmann::json::parse(R"({"objects":["x"]})")), fh::SchemaError);
    CHECK_THROWS_AS(category_table_from_json(nlohmann::json::parse("[1,2]")), fh::SchemaError);
}

TEST_CASE("colimits of sets")
{
    SetDiagram coproduct{discrete_category(2), {1, 1}, {{0}, {0}}};
    CHECK(colimit_of_sets(coproduct).size == 2);

    // {(f,g),(g,f)} ⇉ {gf, fg} with d0 = composite in one order, d1 in the other.
    FinCategory pp = parallel_pair();
    SetDiagram trace{pp, {2, 2}, {}};
    trace.maps.resize(pp.morphism_count());
    trace.maps[named(pp, "id_s")] = {0, 1};
    trace.maps[named(pp, "id_t")] = {0, 1};
    trace.maps[named(pp, "d0")] = {0, 1};
    trace.maps[named(pp, "d1")] = {1, 0};
    REQUIRE(validate_diagram(trace).ok());
    Colimit col = colimit_of_sets(trace);
    CHECK(col.size == 1);
    CHECK(col.size == brute_colimit_size(trace));

    FinCategory z2 = group_category({{0, 1}, {1, 0}});
    SetDiagram swap{z2, {2}, {{0, 1}, {1, 0}}};
    CHECK(colimit_of_sets(swap).size == 1);
}

TEST_CASE("limits of sets")
{
    FinCategory cs = cospan_shape();
    SetDiagram pullback{cs, {2, 1, 1}, {}};
    pullback.maps.resize(cs.morphism_count());
    pullback.maps[named(cs, "id_a")] = {0, 1};
    pullback.maps[named(cs, "id_b")] = {0};
    pullback.maps[named(cs, "id_c")] = {0};
    pullback.maps[named(cs, "f")] = {0, 0};
    pullback.maps[named(cs, "g")] = {0};
    CHECK(limit_of_sets(pullback).size() == 2);

    FinCategory pp = parallel_pair();
    SetDiagram equalizer{pp, {2, 2}, {}};
    equalizer.maps.resize(pp.morphism_count());
    equalizer.maps[named(pp, "id_s")] = {0, 1};
    equalizer.maps[named(pp, "id_t")] = {0, 1};
    equalizer.maps[named(pp, "d0")] = {0, 1};
    equalizer.maps[named(pp, "d1")] = {1, 0};
    CHECK(limit_of_sets(equalizer).size() == 0);

    // Y1 x_{Y0} Y1 for the nerve of {0<1}: composable pairs of chains.
    SimplicialSet nerve = poset_nerve_01();
    REQUIRE(validate_simplicial(nerve).ok());
    SetDiagram composable{cs, {3, 3, 2}, {}};
    composable.maps.resize(cs.morphism_count());
    composable.maps[named(cs, "id_a")] = {0, 1, 2};
    composable.maps[named(cs, "id_b")] = {0, 1, 2};
    composable.maps[named(cs, "id_c")] = {0, 1};
    composable.maps[named(cs, "f")] = nerve.levels[1].faces[0];
    composable.maps[named(cs, "g")] = nerve.levels[1].faces[1];
    std::size_t chains = 0;
    for (int a = 0; a <= 1; ++a)
        for (int b = a; b <= 1; ++b)
            for (int c = b; c <= 1; ++c)
                ++chains;
    CHECK(limit_of_sets(composable).size() == 4);
    CHECK(limit_of_sets(composable).size() == chains);
}

TEST_CASE("colimits and limits agree with brute force on random diagrams")
{
    std::mt19937 rng(20261015);
    std::vector<FinCategory> shapes = {discrete_category(3), parallel_pair(), cospan_shape(), zigzag_shape()};
    for (const auto& shape : shapes) {
        for (int trial = 0; trial < 200; ++trial) {
            SetDiagram d = random_diagram(shape, rng);
            REQUIRE(validate_diagram(d).ok());
            Colimit col = colimit_of_sets(d);
            CHECK(col.size == brute_colimit_size(d));
            for (MorphismId f = 0; f < static_cast<MorphismId>(shape.morphism_count()); ++f) {
                for (std::size_t i = 0; i < d.sizes[shape.source(f)]; ++i)
                    CHECK(col.cocone[shape.source(f)][i] == col.cocone[shape.target(f)][d.maps[f][i]]);
            }
            CHECK(limit_of_sets(d).size() == brute_limit_size(d));
        }
    }
}

TEST_CASE("factorizations in the simplex category")
{
    FinCategory delta = truncated_simplex_category(3);
    FactorizationSystem fs = active_closed(delta);
    CHECK(validate_factorization_system(delta, fs).ok());

    Factorization a = factorize_morphism(delta, fs, named(delta, "[1>3]1,2"));
    CHECK(delta.morphism_name(a.left) == "[1>1]0,1");
    CHECK(delta.morphism_name(a.right) == "[1>3]1,2");

    Factorization b = factorize_morphism(delta, fs, named(delta, "[2>1]0,0,1"));
    CHECK(delta.morphism_name(b.left) == "[2>1]0,0,1");
    CHECK(delta.morphism_name(b.right) == "[1>1]0,1");

    for (MorphismId f = 0; f < static_cast<MorphismId>(delta.morphism_count()); ++f) {
        Factorization p = factorize_morphism(delta, fs, f);
        CHECK(delta.compose_or_throw(p.right, p.left) == f);
        CHECK(fs.left[p.left]);
        CHECK(fs.right[p.right]);
    }

    CHECK(validate_factorization_system(delta, isos_then_all(delta)).ok());
    CHECK(validate_factorization_system(delta, all_then_isos(delta)).ok());

    FactorizationSystem bogus = fs;
    for (MorphismId f = 0; f < static_cast<MorphismId>(delta.morphism_count()); ++f) {
        bogus.left[f] = delta.is_isomorphism(f);
        bogus.right[f] = delta.is_isomorphism(f);
    }
    CHECK_FALSE(validate_factorization_system(delta, bogus).ok());
    CHECK_THROWS_AS(factorize_morphism(delta, bogus, named(delta, "[2>1]0,0,1")), std::domain_error);
}

TEST_CASE("isomorphisms factor trivially")
{
    FinCategory z3 = group_category({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}});
    FactorizationSystem fs = isos_then_all(z3);
    REQUIRE(validate_factorization_system(z3, fs).ok());
    for (MorphismId f = 0; f < 3; ++f) {
        auto all = all_factorizations(z3, fs, f);
        CHECK(all.size() == 3);
        for (const auto& a : all) {
            for (const auto& b : all)
                CHECK(comparison_isomorphisms(z3, a, b) == 1);
        }
    }
}

TEST_CASE("codiscrete category objects")
{
    CHECK(codiscrete(0, 0).levels[0].size == 0);
    CHECK(codiscrete(2, 1).levels[1].size == 4);
    SimplicialSet v3 = codiscrete(3, 4);
    CHECK(v3.levels[2].size == 27);
    CHECK(validate_simplicial(v3).ok());
    for (int n = 1; n <= 4; ++n) {
        CHECK(spine_fiber_product_size(v3, n) == v3.levels[n].size);
        CHECK(segal_map_bijective(v3, n));
    }
    CHECK(is_segal(v3));
    SetDiagram d = to_set_diagram(codiscrete(2, 2));
    CHECK(validate_diagram(d).ok());
}

TEST_CASE("a non-Segal simplicial set is detected")
{
    // The boundary of the 2-simplex: three vertices, three edges, no 2-simplices
    // besides degenerate ones, so the composable pair (01,12) has no filler.
    SimplicialSet s;
    s.levels.resize(3);
    s.levels[0].size = 3;
    // Level 1: 00,11,22 (degenerate), 01, 12, 02.
    s.levels[0].degeneracies = {{0, 1, 2}};
    s.levels[1].size = 6;
    s.levels[1].faces = {{0, 1, 2, 1, 2, 2}, {0, 1, 2, 0, 1, 0}};
    // Level 2: degenerate triangles s0(e), s1(e) for every edge e, identified on vertices.
    // Elements: 000,111,222, 001(s0 01),011(s1 01), 112, 122, 002, 022.
    s.levels[1].degeneracies = {{0, 1, 2, 3, 5, 7}, {0, 1, 2, 4, 6, 8}};
    s.levels[2].size = 9;
    s.levels[2].faces = {
        {0, 1, 2, 3, 1, 4, 2, 5, 2},
        {0, 1, 2, 3, 3, 4, 4, 5, 5},
        {0, 1, 2, 0, 3, 1, 4, 0, 5},
    };
    REQUIRE(validate_simplicial(s).ok());
    CHECK_FALSE(segal_map_bijective(s, 2));
    CHECK_FALSE(is_segal(s));
}

TEST_CASE("free category on sequences")
{
    auto count_between = [](int vertices, int m_max) {
        std::size_t total = 0;
        std::size_t inner = 1;
        for (int m = 1; m <= m_max; ++m) {
            total += inner;
            inner *= vertices;
        }
        return total;
    };
    FinCategory one = free_act({"a", "b"}, 1);
    CHECK(one.hom(0, 1).size() == 1);
    FinCategory two = free_act({"a", "b"}, 2);
    CHECK(two.hom(0, 1).size() == 3);
    CHECK(two.hom(0, 1).size() == count_between(2, 2));
    FinCategory three = free_act({"a", "b", "c"}, 3);
    CHECK(three.hom(0, 2).size() == count_between(3, 3));

    Composite ab_ba = two.compose(named(two, "[b,a]"), named(two, "[a,b]"));
    REQUIRE(ab_ba.defined());
    CHECK(two.morphism_name(ab_ba.value) == "[a,b,a]");
    CHECK(free_act_length(two, ab_ba.value) == 2);
    CHECK(free_act_length(two, named(two, "[a]")) == 0);

    Composite over = one.compose(named(one, "[b,a]"), named(one, "[a,b]"));
    CHECK(over.kind == Composite::Kind::bound_exceeded);
    CHECK(one.truncation().has_value());

    CHECK(validate_axioms(three).ok());
    CHECK_THROWS_AS(free_act({"a"}, 0), std::invalid_argument);
}

TEST_CASE("free cocartesian fibration over a point")
{
    FinCategory point = discrete_category(1);
    FinCategory e = chain_category(2);
    Functor p{std::vector<ObjectId>(e.object_count(), 0), std::vector<MorphismId>(e.morphism_count(), 0)};
    REQUIRE(validate_functor(e, point, p).ok());
    FreeCocartesian fc = free_cocart_second_factor(e, point, p, isos_then_all(point));
    CHECK(fc.total.object_count() == e.object_count());
    CHECK(fc.total.morphism_count() == e.morphism_count());
}

TEST_CASE("free cocartesian fibration over the arrow")
{
    FinCategory b = chain_category(1);
    CategoryBuilder eb;
    ObjectId x = eb.add_object("x");
    eb.add_identity(x, "id_x");
    FinCategory e = eb.build();
    Functor p{{0}, {named(b, "0<=0")}};
    REQUIRE(validate_functor(e, b, p).ok());

    FreeCocartesian fc = free_cocart_second_factor(e, b, p, isos_then_all(b));
    std::set<std::string> objects;
    for (ObjectId o = 0; o < static_cast<ObjectId>(fc.total.object_count()); ++o)
        objects.insert(fc.total.object_name(o));
    CHECK(objects == std::set<std::string>{"(x,0<=0)", "(x,0<=1)"});
}

TEST_CASE("distinguished lifts are cocartesian for every factorization system")
{
    for (int n = 1; n <= 2; ++n) {
        FinCategory b = chain_category(n);
        auto systems = all_factorization_systems(b);
        CHECK(systems.size() >= 2);
        Functor id = identity_functor(b);
        for (const auto& fs : systems) {
            FreeCocartesian fc = free_cocart_second_factor(b, b, id, fs);
            CHECK(validate_functor(fc.total, b, fc.projection).ok());
            for (ObjectId o = 0; o < static_cast<ObjectId>(fc.total.object_count()); ++o) {
                ObjectId base = fc.projection.on_objects[o];
                for (ObjectId t = 0; t < static_cast<ObjectId>(b.object_count()); ++t) {
                    for (MorphismId g : b.hom(base, t)) {
                        CocartesianLift lift = cocartesian_lift(fc, b, b, id, fs, o, g);
                        CHECK(fc.projection.on_morphisms[lift.morphism] == g);
                        CHECK(fs.left[lift.square.left]);
                        CHECK(fs.right[lift.square.right]);
                        CHECK(is_cocartesian(fc.total, b, fc.projection, lift.morphism));
                    }
                }
            }
        }
    }
}
