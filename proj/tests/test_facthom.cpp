#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "fh/enrich/catalog.hpp"
#include "fh/facthom/cyclic_bar.hpp"
#include "fh/facthom/disk.hpp"
#include "fh/facthom/hochschild.hpp"
#include "fh/facthom/trace.hpp"
#include "fh/linalg/homology.hpp"

using namespace fh;
using namespace fh::facthom;
using enrich::GroupTable;
using fincat::MorphismId;
using linalg::SparseMatrix;
using manifold::GraphManifold;

namespace {

const linalg::Ring Q = linalg::parse_ring("Q");

std::size_t conjugacy_classes(const GroupTable& g)
{
    const int n = static_cast<int>(g.size());
    std::vector<int> inverse(n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (g[a][b] == 0)
                inverse[a] = b;
    std::set<std::set<int>> classes;
    for (int x = 0; x < n; ++x) {
        std::set<int> cls;
        for (int h = 0; h < n; ++h)
            cls.insert(g[g[h][x]][inverse[h]]);
        classes.insert(cls);
    }
    return classes.size();
}

// dim A - rank of (a, b) ↦ ab - ba.
std::size_t commutator_quotient_rank(const enrich::LinearCategory& a)
{
    const std::size_t n = a.hom_dim(0, 0);
    SparseMatrix m(n, n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<mpq_class> ei(n), ej(n);
            ei[i] = 1;
            ej[j] = 1;
            auto ab = a.multiply(0, 0, 0, ei, ej);
            auto ba = a.multiply(0, 0, 0, ej, ei);
            for (std::size_t k = 0; k < n; ++k)
                m.add(k, i * n + j, ab[k] - ba[k]);
        }
    }
    return n - linalg::rank(m, a.ring());
}

std::vector<std::size_t> ranks(const std::vector<linalg::HomologyGroup>& h)
{
    std::vector<std::size_t> r;
    for (const auto& g : h)
        r.push_back(g.value.rank);
    return r;
}

std::vector<std::size_t> composed(const std::vector<std::size_t>& outer, const std::vector<std::size_t>& inner)
{
    std::vector<std::size_t> out(inner.size());
    for (std::size_t i = 0; i < inner.size(); ++i)
        out[i] = outer[inner[i]];
    return out;
}

std::vector<enrich::SetEnrichedCategory> small_categories()
{
    return {enrich::walking_idempotent(),
            enrich::delooping(enrich::cyclic_group(2)),
            enrich::delooping(enrich::cyclic_group(3)),
            enrich::poset(1, {}),
            enrich::poset(2, {{0, 1}}),
            enrich::poset(2, {}),
            enrich::poset(3, {{0, 1}, {1, 2}}),
            enrich::poset(3, {{0, 2}, {1, 2}}),
            enrich::poset(3, {{0, 1}, {0, 2}})};
}

GraphManifold random_graph(std::mt19937& rng, int max_vertices, int max_edges)
{
    GraphManifold g;
    const int nv = 1 + static_cast<int>(rng() % max_vertices);
    for (int v = 0; v < nv; ++v)
        g.vertices.push_back("v" + std::to_string(v));
    const int ne = static_cast<int>(rng() % (max_edges + 1));
    for (int e = 0; e < ne; ++e)
        g.edges.push_back({"e" + std::to_string(e), static_cast<int>(rng() % nv), static_cast<int>(rng() % nv)});
    return g;
}

} // namespace

TEST_CASE("entering paths")
{
    auto c = enter_category(manifold::pointed_circle());
    CHECK(c.object_count() == 2);
    CHECK(c.hom(1, 0).size() == 2);
    CHECK(fincat::validate_axioms(c).ok());
    CHECK_THROWS_AS(enter_category(manifold::circle()), std::domain_error);
}

TEST_CASE("cartesian evaluation on disks")
{
    auto arrow = enrich::nerve(enrich::poset(2, {{0, 1}}), 5);
    CHECK(cart_facthom_disk(manifold::point(), arrow).size() == 2);
    CHECK(cart_facthom_disk(manifold::chain(2), arrow).size() == 4);

    // ⟨n⟩ sees exactly Y_n through its spine.
    for (auto y : {arrow, enrich::nerve(enrich::delooping(enrich::cyclic_group(3)), 5),
                   enrich::nerve(enrich::poset(3, {{0, 1}, {1, 2}}), 5), fincat::codiscrete(2, 5)}) {
        for (int n = 0; n <= 5; ++n) {
            auto lim = cart_facthom_disk(manifold::chain(n), y, true);
            REQUIRE(lim.size() == y.levels[n].size);
            std::set<std::vector<std::size_t>> image;
            for (std::size_t x = 0; x < y.levels[n].size; ++x) {
                std::vector<std::size_t> family;
                for (int i = 0; i <= n; ++i)
                    family.push_back(fincat::vertex_of(y, n, x, i));
                for (int i = 0; i < n; ++i)
                    family.push_back(fincat::spine_edge(y, n, x, i));
                image.insert(family);
            }
            CHECK(image == std::set<std::vector<std::size_t>>(lim.families.begin(), lim.families.end()));
        }
    }

    // A level-1 set with no 2-simplices gluing its edges is not Segal.
    auto thin = fincat::codiscrete(2, 2);
    thin.levels[2].size = 0;
    for (auto& face : thin.levels[2].faces)
        face.clear();
    thin.levels[1].degeneracies.clear();
    CHECK_FALSE(fincat::is_segal(thin));
    CHECK_THROWS_AS(cart_facthom_disk(manifold::chain(2), thin, true), std::invalid_argument);
}

TEST_CASE("enriched evaluation on disks")
{
    auto idem = enrich::walking_idempotent();
    CHECK(enr_facthom_disk(manifold::point(), idem).size() == 1);
    CHECK(enr_facthom_disk(manifold::pointed_circle(), idem).size() == 2);
    CHECK(enr_facthom_disk(manifold::interval(), idem).size() == 2);
    CHECK(enr_facthom_disk(GraphManifold{}, idem).size() == 1);
    auto three = enrich::poset(3, {});
    CHECK(enr_facthom_disk(manifold::point(), three).size() == 3);

    auto q = enrich::rationals();
    CHECK(enr_facthom_disk(manifold::point(), q).dim() == 1);
    CHECK(enr_facthom_disk(manifold::point(), enrich::linearize(three.cat, Q)).dim() == 3);
    CHECK(enr_facthom_disk(manifold::chain(3), enrich::matrix_algebra(2, Q)).dim() == 64);

    // Linearizing commutes with evaluation on labelings.
    std::mt19937 rng(31);
    for (int trial = 0; trial < 40; ++trial) {
        auto r = random_graph(rng, 3, 3);
        for (const auto& c : small_categories())
            CHECK(enr_facthom_disk(r, enrich::linearize(c.cat, Q)).dim() == enr_facthom_disk(r, c).size());
    }
}

TEST_CASE("enriched and cartesian routes agree")
{
    std::mt19937 rng(37);
    for (int trial = 0; trial < 60; ++trial) {
        auto r = random_graph(rng, 4, 4);
        for (const auto& c : small_categories()) {
            auto y = enrich::nerve(c, 2);
            auto lim = cart_facthom_disk(r, y);
            auto enr = enr_facthom_disk(r, c);
            REQUIRE(lim.size() == enr.size());
            std::set<std::vector<std::size_t>> image;
            for (const auto& l : enr.elements)
                image.insert(labeling_to_family(l, y, c));
            CHECK(image == std::set<std::vector<std::size_t>>(lim.families.begin(), lim.families.end()));
        }
    }
}

TEST_CASE("groupoid labelings are counted up to isomorphism")
{
    // BZ/2 with its whole core: labelings of D¹ are conjugacy orbits of
    // elements under (h, k)·g = k g h⁻¹, a single orbit.
    auto z2 = enrich::delooping(enrich::cyclic_group(2));
    z2.core = {1};
    CHECK(enr_facthom_disk(manifold::interval(), z2).size() == 1);
    // On S¹_* the action is conjugation: Z/2 is abelian, so two classes.
    CHECK(enr_facthom_disk(manifold::pointed_circle(), z2).size() == 2);
    auto s3 = enrich::delooping(enrich::symmetric_group3());
    for (MorphismId f = 1; f < 6; ++f)
        s3.core.push_back(f);
    CHECK(enr_facthom_disk(manifold::pointed_circle(), s3).size() == 3);
}

TEST_CASE("cyclic bar construction in sets")
{
    auto idem = enrich::walking_idempotent();
    auto levels = cyclic_bar_levels(idem.cat, 4);
    CHECK(levels[1].elements.size() == 4);
    for (const auto& c : small_categories()) {
        auto lv = cyclic_bar_levels(c.cat, 4);
        for (int n = 1; n <= 4; ++n) {
            const auto& L = lv[n];
            const auto& D = lv[n - 1];
            // d_i d_j = d_{j-1} d_i for i < j.
            for (int j = 1; j <= n && n >= 2; ++j)
                for (int i = 0; i < j; ++i)
                    CHECK(composed(D.faces[i], L.faces[j]) == composed(D.faces[j - 1], L.faces[i]));
            // d_i t = t d_{i-1}, d_0 t = d_n.
            for (int i = 1; i <= n; ++i)
                CHECK(composed(L.faces[i], L.cyclic) == composed(D.cyclic, L.faces[i - 1]));
            CHECK(composed(L.faces[0], L.cyclic) == L.faces[n]);
            // t^{n+1} = 1.
            std::vector<std::size_t> power(L.elements.size());
            for (std::size_t x = 0; x < power.size(); ++x)
                power[x] = x;
            for (int k = 0; k <= n; ++k)
                power = composed(L.cyclic, power);
            for (std::size_t x = 0; x < power.size(); ++x)
                CHECK(power[x] == x);
            // d_i s_i = d_{i+1} s_i = 1.
            for (int i = 0; i < n; ++i) {
                auto di = composed(L.faces[i], D.degeneracies[i]);
                auto dj = composed(L.faces[i + 1], D.degeneracies[i]);
                for (std::size_t x = 0; x < di.size(); ++x) {
                    CHECK(di[x] == x);
                    CHECK(dj[x] == x);
                }
            }
        }
    }
}

TEST_CASE("cyclic bar construction of algebras")
{
    CyclicBar q(enrich::rationals());
    for (int n = 0; n <= 5; ++n)
        CHECK(q.dim(n) == 1);
    CyclicBar z2(enrich::group_algebra(enrich::cyclic_group(2), Q));
    CHECK(z2.dim(1) == 4);
    CHECK(z2.level(1).basis[1] == "*,*|0,1");

    std::vector<enrich::LinearCategory> algebras = {
        enrich::rationals(), enrich::matrix_algebra(2, Q), enrich::group_algebra(enrich::cyclic_group(2), Q),
        enrich::triangular_algebra(Q), enrich::linearize(enrich::poset(2, {{0, 1}}).cat, Q),
        enrich::linearize(enrich::walking_idempotent().cat, linalg::parse_ring("Z"))};
    std::mt19937 rng(41);
    for (int i = 0; i < 20; ++i)
        algebras.push_back(enrich::random_algebra(rng, 3));
    for (const auto& a : algebras) {
        REQUIRE(enrich::validate_enriched_cat(a).ok());
        CyclicBar bar(a);
        const int top = a.total_dim() > 3 ? 2 : 3;
        for (int n = 1; n <= top; ++n)
            CHECK((bar.boundary(n) * bar.boundary(n + 1)).is_zero(a.ring()));
        for (int n = 0; n <= top; ++n) {
            CHECK((bar.connes_B(n + 1) * bar.connes_B(n)).is_zero(a.ring()));
            SparseMatrix anti = bar.boundary(n + 1) * bar.connes_B(n);
            if (n >= 1)
                anti = anti + bar.connes_B(n - 1) * bar.boundary(n);
            CHECK(anti.is_zero(a.ring()));
            SparseMatrix power = SparseMatrix::identity(bar.dim(n));
            for (int k = 0; k <= n; ++k)
                power = bar.lambda(n) * power;
            CHECK((power - SparseMatrix::identity(bar.dim(n))).is_zero(a.ring()));
        }
    }
    // On ℚ, B_0(a) = (1 + t)(1 ⊗ a) = 2a.
    CHECK(connes_B(enrich::rationals(), 0).at(0, 0) == 2);
}

TEST_CASE("Hochschild homology")
{
    CHECK(ranks(hochschild_homology(enrich::rationals(), 6)) == std::vector<std::size_t>{1, 0, 0, 0, 0, 0, 0});
    auto m2 = hochschild_homology(enrich::matrix_algebra(2, Q), 3);
    CHECK(ranks(m2) == std::vector<std::size_t>{1, 0, 0, 0});
    CHECK(hochschild_homology(enrich::group_algebra(enrich::cyclic_group(2), Q), 0)[0].value.rank == 2);
    CHECK(hochschild_homology(enrich::triangular_algebra(Q), 0)[0].value.rank == 2);
    CHECK(ranks(hochschild_homology(enrich::zero_algebra(), 3)) == std::vector<std::size_t>{0, 0, 0, 0});
    // Dual numbers: HH_n(ℚ[x]/x²) has rank 1 in every positive degree.
    CHECK(ranks(hochschild_homology(enrich::truncated_polynomials(2, Q), 4)) ==
          std::vector<std::size_t>{2, 1, 1, 1, 1});

    // ℤ[G] splits over conjugacy classes as H_*(centralizer; ℤ): for G = ℤ/2
    // that is ℤ², (ℤ/2)², 0.
    auto zz2 = hochschild_homology(enrich::group_algebra(enrich::cyclic_group(2), linalg::parse_ring("Z")), 2);
    CHECK(zz2[0].value.rank == 2);
    CHECK(zz2[0].value.torsion.empty());
    CHECK(zz2[1].value.rank == 0);
    CHECK(zz2[1].value.torsion == std::vector<mpz_class>{2, 2});
    CHECK(zz2[2].value.rank == 0);
    CHECK(zz2[2].value.torsion.empty());
    // Over 𝔽_2 each class contributes H_n(ℤ/2; 𝔽_2) = 𝔽_2.
    auto f2 = hochschild_homology(enrich::group_algebra(enrich::cyclic_group(2), linalg::parse_ring("Fp:2")), 3);
    CHECK(ranks(f2) == std::vector<std::size_t>{2, 2, 2, 2});

    std::mt19937 rng(43);
    for (int i = 0; i < 10; ++i) {
        auto a = enrich::random_algebra(rng, 4);
        CHECK(hochschild_homology(a, 0)[0].value.rank == commutator_quotient_rank(a));
    }
    CHECK(to_json(hochschild_homology(enrich::rationals(), 1)).dump() ==
          R"([{"degree":0,"rank":1,"torsion":[]},{"degree":1,"rank":0,"torsion":[]}])");
}

TEST_CASE("cyclic homology")
{
    auto q = ranks(cyclic_homology(enrich::rationals(), 6));
    CHECK(q == std::vector<std::size_t>{1, 0, 1, 0, 1, 0, 1});
    auto qq = ranks(cyclic_homology(enrich::product_algebra(enrich::rationals(), enrich::rationals()), 6));
    for (std::size_t n = 0; n < q.size(); ++n)
        CHECK(qq[n] == 2 * q[n]);
    CHECK(ranks(cyclic_homology(enrich::zero_algebra(), 4)) == std::vector<std::size_t>{0, 0, 0, 0, 0});
    CHECK(ranks(cyclic_homology(enrich::group_algebra(enrich::cyclic_group(2), Q), 4)) ==
          std::vector<std::size_t>{2, 0, 2, 0, 2});
    CHECK(ranks(cyclic_homology(enrich::matrix_algebra(2, Q), 2)) == std::vector<std::size_t>{1, 0, 1});

    CyclicBar bar(enrich::rationals());
    CHECK(linalg::is_complex(cyclic_complex(bar, 6)));
    CyclicBar tri(enrich::triangular_algebra(Q));
    CHECK(linalg::is_complex(cyclic_complex(tri, 3)));
}

TEST_CASE("negative cyclic homology")
{
    auto q = negative_cyclic(enrich::rationals(), 3, 2);
    CHECK(q.truncation == 2);
    CHECK(ranks(q.groups) == std::vector<std::size_t>{1, 0, 0, 0});
    auto z2 = negative_cyclic(enrich::group_algebra(enrich::cyclic_group(2), Q), 3, 2);
    CHECK(ranks(z2.groups) == std::vector<std::size_t>{2, 0, 0, 0});
    // Separable algebras: results are stable in the truncation.
    CHECK(ranks(negative_cyclic(enrich::rationals(), 3, 1).groups) == ranks(q.groups));
}

TEST_CASE("trace classes")
{
    auto idem = enrich::walking_idempotent();
    auto t = thh_set_pi0(idem.cat);
    CHECK(t.classes.size() == 2);
    CHECK(to_json(t, idem.cat).dump() ==
          R"({"classes":[{"members":["id"],"rep":"id"},{"members":["phi"],"rep":"phi"}]})");
    for (const auto& g : {enrich::cyclic_group(4), enrich::symmetric_group3(), enrich::quaternion_group(),
                          enrich::trivial_group(), enrich::cyclic_group(5)}) {
        auto c = enrich::delooping(g).cat;
        auto table = thh_set_pi0(c);
        CHECK(table.classes.size() == conjugacy_classes(g));
        std::size_t count = 0;
        auto labels = thh_set_pi0_coequalizer(c, &count);
        CHECK(count == table.classes.size());
        for (MorphismId f = 0; f < static_cast<MorphismId>(c.morphism_count()); ++f)
            for (MorphismId h = 0; h < static_cast<MorphismId>(c.morphism_count()); ++h)
                CHECK((labels[f] == labels[h]) == (table.class_of[f] == table.class_of[h]));
    }
    for (const auto& c : small_categories()) {
        auto table = thh_set_pi0(c.cat);
        std::size_t count = 0;
        thh_set_pi0_coequalizer(c.cat, &count);
        CHECK(count == table.classes.size());
        // Rotation fixes classes at level 1.
        auto levels = cyclic_bar_levels(c.cat, 1);
        for (std::size_t x = 0; x < levels[1].elements.size(); ++x) {
            const auto& w = levels[1].elements[x];
            const auto& r = levels[1].elements[levels[1].cyclic[x]];
            CHECK(class_of_word(c.cat, table, w) == class_of_word(c.cat, table, r));
        }
    }
}

TEST_CASE("cyclic words reduce to their composite")
{
    std::mt19937 rng(47);
    for (const auto& c : small_categories()) {
        const auto& cat = c.cat;
        auto table = thh_set_pi0(cat);
        for (int trial = 0; trial < 100; ++trial) {
            // A random cyclic word: random walk, closed by a morphism back.
            const std::size_t len = 1 + rng() % 5;
            std::vector<MorphismId> word;
            fincat::ObjectId start = static_cast<fincat::ObjectId>(rng() % cat.object_count()), at = start;
            bool stuck = false;
            for (std::size_t i = 0; i + 1 < len && !stuck; ++i) {
                std::vector<MorphismId> out;
                for (fincat::ObjectId y = 0; y < static_cast<fincat::ObjectId>(cat.object_count()); ++y)
                    for (MorphismId f : cat.hom(at, y))
                        out.push_back(f);
                MorphismId f = out[rng() % out.size()];
                word.push_back(f);
                at = cat.target(f);
            }
            auto back = cat.hom(at, start);
            if (back.empty())
                continue;
            word.push_back(back[rng() % back.size()]);
            auto cls = class_of_word(cat, table, word);
            REQUIRE(cls.has_value());
            // Every rotation lands in the same class.
            for (std::size_t k = 1; k < word.size(); ++k) {
                std::vector<MorphismId> rotated(word.begin() + k, word.end());
                rotated.insert(rotated.end(), word.begin(), word.begin() + k);
                CHECK(class_of_word(cat, table, rotated) == cls);
            }
        }
    }
}

TEST_CASE("free monoid trace classes are necklaces")
{
    auto f = enrich::free_monoid(2, 6);
    auto table = thh_set_pi0(f.cat);
    std::map<std::size_t, std::size_t> by_length;
    for (const auto& cls : table.classes)
        ++by_length[f.cat.morphism_name(cls.rep) == "1" ? 0 : f.cat.morphism_name(cls.rep).size()];
    CHECK(by_length[0] == 1);
    CHECK(by_length[4] == 6);
    CHECK(by_length[6] == 14);
    auto aab = *f.cat.find_morphism("aab");
    CHECK(f.cat.morphism_name(table.classes[*table.class_of[*f.cat.find_morphism("baa")]].rep) == "aab");
    CHECK(table.class_of[aab] == table.class_of[*f.cat.find_morphism("aba")]);
}

TEST_CASE("factorization homology counts")
{
    auto idem = enrich::walking_idempotent();
    auto d0s1 = manifold::disjoint_union(manifold::point(), manifold::circle());
    CHECK(facthom_set_pi0(d0s1, idem).total == 2);
    auto s1s1 = manifold::disjoint_union(manifold::circle(), manifold::circle());
    auto bz4 = enrich::delooping(enrich::cyclic_group(4));
    auto count = facthom_set_pi0(s1s1, bz4);
    CHECK(count.total == 16);
    CHECK(count.circle_parts == std::vector<std::size_t>{4, 4});
    CHECK(facthom_set_pi0(GraphManifold{}, bz4).total == 1);
    // A marked circle is disk-stratified: labelings of the cycle.
    CHECK(facthom_set_pi0(manifold::marked_circle(2), bz4).total == 16);
}
