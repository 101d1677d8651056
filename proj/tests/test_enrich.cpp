#include <doctest.h>

#include <random>
#include <set>

#include "fh/enrich/backend.hpp"
#include "fh/enrich/catalog.hpp"
#include "fh/enrich/category.hpp"
#include "fh/enrich/corr.hpp"

using namespace fh;
using namespace fh::enrich;
using manifold::FinSpan;
using manifold::identity_span;

namespace {

const linalg::Ring Q = linalg::parse_ring("Q");

bool is_group(const GroupTable& t)
{
    const int n = static_cast<int>(t.size());
    for (int a = 0; a < n; ++a) {
        if (t[0][a] != a || t[a][0] != a)
            return false;
        bool has_inverse = false;
        for (int b = 0; b < n; ++b) {
            has_inverse |= t[a][b] == 0 && t[b][a] == 0;
            for (int c = 0; c < n; ++c)
                if (t[t[a][b]][c] != t[a][t[b][c]])
                    return false;
        }
        if (!has_inverse)
            return false;
    }
    return true;
}

FinSpan random_span(std::mt19937& rng, std::size_t s, std::size_t t, std::size_t apex)
{
    FinSpan out{s, t, {}, {}};
    for (std::size_t u = 0; u < apex; ++u) {
        out.left.push_back(rng() % s);
        out.right.push_back(rng() % t);
    }
    return out;
}

} // namespace

TEST_CASE("set and linear backends")
{
    FinSetBackend set;
    CHECK(set.tensor_all({}) == 1);
    CHECK(set.tensor_all({2, 3}) == 6);
    CHECK(set.tensor_all({4}) == 4);
    std::vector<std::size_t> sizes{2, 3, 4};
    for (std::size_t x = 0; x < 24; ++x)
        CHECK(FinSetBackend::encode(sizes, FinSetBackend::decode(sizes, x)) == x);
    CHECK(FinSetBackend::decode(sizes, 23) == std::vector<std::size_t>{1, 2, 3});

    ExactLinearBackend lin{Q};
    CHECK(lin.tensor_all({}).dim() == 1);
    BasedModule two{{"x", "y"}};
    auto four = lin.tensor_all({two, two});
    CHECK(four.dim() == 4);
    CHECK(four.basis[1] == "x⊗y");
    CHECK(lin.same(lin.tensor(two, lin.unit()), two));

    linalg::SparseMatrix a(2, 2), b(1, 2);
    a.add(0, 1, 1);
    a.add(1, 0, 2);
    b.add(0, 0, 3);
    b.add(0, 1, 5);
    auto k = kronecker(a, b);
    CHECK(k.rows() == 2);
    CHECK(k.cols() == 4);
    CHECK(k.at(0, 2) == 3);
    CHECK(k.at(0, 3) == 5);
    CHECK(k.at(1, 0) == 6);
    CHECK(k.at(1, 1) == 10);
}

TEST_CASE("catalog groups")
{
    for (const auto& g : {cyclic_group(4), symmetric_group3(), quaternion_group(), trivial_group()})
        CHECK(is_group(g));
    // Q8: -1 is central of order 2, i² = -1.
    auto q8 = quaternion_group();
    CHECK(q8[1][1] == 4);
    CHECK(q8[1][2] == 3);
    CHECK(q8[2][1] == 7);
    for (int a = 0; a < 8; ++a)
        CHECK(q8[a][4] == q8[4][a]);
    // S3 is not abelian.
    auto s3 = symmetric_group3();
    bool abelian = true;
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b)
            abelian &= s3[a][b] == s3[b][a];
    CHECK_FALSE(abelian);
}

TEST_CASE("enriched presentations validate")
{
    CHECK(validate_enriched_cat(rationals()).ok());
    CHECK(validate_enriched_cat(walking_idempotent()).ok());
    CHECK(validate_enriched_cat(matrix_algebra(2, Q)).ok());
    CHECK(validate_enriched_cat(group_algebra(symmetric_group3(), Q)).ok());
    CHECK(validate_enriched_cat(triangular_algebra(Q)).ok());
    CHECK(validate_enriched_cat(truncated_polynomials(3, Q)).ok());
    CHECK(validate_enriched_cat(zero_algebra()).ok());
    CHECK(validate_enriched_cat(product_algebra(rationals(), matrix_algebra(2, Q))).ok());
    CHECK(validate_enriched_cat(linearize(poset(3, {{0, 1}, {1, 2}}).cat, Q)).ok());

    // Unit e_0 with e_1 e_2 = e_1 and all other products of e_1, e_2 zero:
    // (e_1 e_2) e_2 = e_1 but e_1 (e_2 e_2) = 0.
    auto bad = truncated_polynomials(3, Q);
    bad.set_constant(0, 0, 0, 1, 1, 2, 0);
    bad.set_constant(0, 0, 0, 1, 2, 1, 1);
    auto report = validate_enriched_cat(bad);
    REQUIRE_FALSE(report.ok());
    CHECK(report.summary().find("associativity fails on (*,*,*,*)") != std::string::npos);

    auto no_unit = rationals();
    no_unit.set_unit(0, {2});
    CHECK(validate_enriched_cat(no_unit).summary().find("unit law") != std::string::npos);

    auto half = algebra(linalg::parse_ring("Z"), {{{mpq_class(1, 2)}}}, {2});
    CHECK(validate_enriched_cat(half).summary().find("outside Z") != std::string::npos);
}

TEST_CASE("matrix and group algebra products")
{
    auto m2 = matrix_algebra(2, Q);
    // E12 then E21 = E12 E21 = E11.
    std::vector<mpq_class> e12{0, 1, 0, 0}, e21{0, 0, 1, 0};
    CHECK(m2.multiply(0, 0, 0, e12, e21) == std::vector<mpq_class>{1, 0, 0, 0});
    CHECK(m2.multiply(0, 0, 0, e21, e12) == std::vector<mpq_class>{0, 0, 0, 1});

    auto s3 = symmetric_group3();
    auto qs3 = group_algebra(s3, Q);
    for (int a = 0; a < 6; ++a) {
        for (int b = 0; b < 6; ++b) {
            std::vector<mpq_class> ea(6), eb(6), expect(6);
            ea[a] = 1;
            eb[b] = 1;
            expect[s3[b][a]] = 1;
            CHECK(qs3.multiply(0, 0, 0, ea, eb) == expect);
        }
    }
}

TEST_CASE("random algebras are associative and unital")
{
    std::mt19937 rng(17);
    std::set<std::size_t> dims;
    for (int i = 0; i < 30; ++i) {
        auto a = random_algebra(rng, 4);
        dims.insert(a.hom_dim(0, 0));
        CHECK(validate_enriched_cat(a).ok());
        // Integral change of basis keeps everything over ℤ.
        CHECK(validate_enriched_cat(change_ring(a, linalg::parse_ring("Z"))).ok());
    }
    CHECK(dims.size() >= 3);
}

TEST_CASE("linear category JSON")
{
    auto a = product_algebra(triangular_algebra(Q), rationals());
    auto doc = to_json(a);
    auto back = linear_category_from_json(doc);
    CHECK(to_json(back) == doc);

    auto j = nlohmann::json::parse(R"({"ring":"Q","objects":["x","y"],"hom_dims":{"x->x":1,"y->y":1,"x->y":1},
        "structure_constants":{"x->x->x":[[[1]]],"y->y->y":[[[1]]],"x->x->y":[[[1]]],"x->y->y":[[[1]]]},
        "units":{"x":[1],"y":["2/2"]}})");
    auto arrow = linear_category_from_json(j);
    CHECK(validate_enriched_cat(arrow).ok());
    CHECK(arrow.hom_dim(1, 0) == 0);

    CHECK_THROWS_AS(linear_category_from_json(nlohmann::json::parse(R"({"ring":"Q"})")), SchemaError);
    j["ring"] = "Fp:4";
    CHECK_THROWS_AS(linear_category_from_json(j), SchemaError);
    j["ring"] = "Q";
    j["units"]["x"] = {"one"};
    CHECK_THROWS_AS(linear_category_from_json(j), SchemaError);

    auto third = algebra(Q, {{{mpq_class(1, 3)}}}, {3});
    CHECK(to_json(third)["structure_constants"]["*->*->*"][0][0][0] == "1/3");
    CHECK_THROWS_AS(change_ring(third, linalg::parse_ring("Z")), std::domain_error);
    CHECK_THROWS_AS(change_ring(third, linalg::parse_ring("Fp:3")), std::domain_error);
    CHECK(validate_enriched_cat(change_ring(third, linalg::parse_ring("Fp:5"))).ok());
}

TEST_CASE("nerve")
{
    auto idem = nerve(walking_idempotent(), 4);
    CHECK(idem.levels[0].size == 1);
    CHECK(idem.levels[1].size == 2);
    CHECK(idem.levels[2].size == 4);
    CHECK(validate_simplicial(idem).ok());
    CHECK(fincat::is_segal(idem));

    auto arrow = nerve(poset(2, {{0, 1}}), 4);
    CHECK(arrow.levels[2].size == 4);
    CHECK(arrow.labels[0] == std::vector<std::string>{"0", "1"});
    CHECK(validate_simplicial(arrow).ok());
    CHECK(fincat::is_segal(arrow));

    auto chain = nerve(poset(4, {{0, 1}, {1, 2}, {2, 3}}), 4);
    // Level n of the nerve of [k] counts monotone maps [n] -> [k].
    CHECK(chain.levels[3].size == 35);
    CHECK(fincat::is_segal(chain));

    auto bg = nerve(delooping(symmetric_group3()), 3);
    CHECK(bg.levels[3].size == 216);
    CHECK(validate_simplicial(bg).ok());
    CHECK(fincat::is_segal(bg));

    auto withcore = delooping(cyclic_group(2));
    withcore.core = {1};
    CHECK(validate_enriched_cat(withcore).ok());
    CHECK_THROWS_AS(nerve(withcore, 2), std::invalid_argument);
    CHECK_THROWS_AS(nerve(free_monoid(2, 3), 2), std::domain_error);
    auto idem_core = walking_idempotent();
    idem_core.core = {1};
    CHECK_FALSE(validate_enriched_cat(idem_core).ok());
}

TEST_CASE("free monoid")
{
    auto f = free_monoid(2, 4);
    CHECK(f.cat.morphism_count() == 31);
    CHECK(f.cat.morphism_name(f.cat.unit(0)) == "1");
    auto ab = *f.cat.find_morphism("ab");
    auto ba = *f.cat.find_morphism("ba");
    CHECK(f.cat.morphism_name(f.cat.compose_or_throw(ba, ab)) == "abba");
    auto abb = *f.cat.find_morphism("abb");
    CHECK(f.cat.compose(abb, ab).kind == fincat::Composite::Kind::bound_exceeded);
    CHECK(validate_enriched_cat(f).ok());
}

TEST_CASE("correspondence pushforward")
{
    CHECK(corr_pushforward(identity_span(3), {2, 3, 4}).values == std::vector<std::size_t>{2, 3, 4});
    FinSpan diagonal{1, 1, {0, 0}, {0, 0}};
    CHECK(corr_pushforward(diagonal, {3}).values == std::vector<std::size_t>{9});
    FinSpan empty_fibre{1, 2, {0}, {0}};
    CHECK(corr_pushforward(empty_fibre, {3}).values == std::vector<std::size_t>{3, 1});
    CHECK_THROWS_AS(corr_pushforward(diagonal, {1, 2}), std::invalid_argument);

    std::mt19937 rng(23);
    for (int trial = 0; trial < 300; ++trial) {
        std::size_t s = 1 + rng() % 3, t = 1 + rng() % 3, r = 1 + rng() % 3;
        auto a = random_span(rng, s, t, rng() % 4);
        auto b = random_span(rng, t, r, rng() % 4);
        std::vector<std::size_t> family(s);
        for (auto& v : family)
            v = rng() % 4;
        auto w = pushforward_witness(a, b, family);
        CHECK(w.composite.values == w.iterated.values);
        CHECK(witness_valid(a, b, family, w));
        // Cardinality oracle: |(b∘a)_*V|_r = ∏_v ∏_{u over ψ_b(v)} V.
        for (std::size_t k = 0; k < r; ++k) {
            std::size_t expect = 1;
            for (std::size_t v = 0; v < b.apex_size(); ++v)
                if (b.right[v] == k)
                    for (std::size_t u = 0; u < a.apex_size(); ++u)
                        if (a.right[u] == b.left[v])
                            expect *= family[a.left[u]];
            CHECK(w.composite.values[k] == expect);
        }
    }

    // A tampered table is rejected.
    FinSpan a{1, 1, {0, 0}, {0, 0}};
    auto w = pushforward_witness(a, identity_span(1), {2});
    std::swap(w.bijection[0][0], w.bijection[0][1]);
    CHECK_FALSE(witness_valid(a, identity_span(1), {2}, w));
}

TEST_CASE("pointed maps and their monodromy")
{
    std::mt19937 rng(29);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t s = rng() % 4, t = 1 + rng() % 3;
        PointedMap f(s);
        for (auto& x : f)
            if (rng() % 4)
                x = rng() % t;
        std::vector<std::size_t> family(s);
        for (auto& v : family)
            v = 1 + rng() % 3;
        CHECK(corr_pushforward(span_of_pointed_map(f, t), family).values == pointed_monodromy(f, t, family));
    }
    CHECK_THROWS_AS(span_of_pointed_map({std::size_t{3}}, 2), std::out_of_range);
}
