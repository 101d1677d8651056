#include "fh/enrich/catalog.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <stdexcept>

#include "fh/fincat/set_diagram.hpp"

namespace fh::enrich {

using fincat::CategoryBuilder;
using fincat::MorphismId;
using fincat::ObjectId;

GroupTable cyclic_group(int n)
{
    GroupTable t(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            t[a][b] = (a + b) % n;
    return t;
}

GroupTable symmetric_group3()
{
    std::vector<std::array<int, 3>> perms;
    std::array<int, 3> p{0, 1, 2};
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    GroupTable t(6, std::vector<int>(6));
    for (int a = 0; a < 6; ++a) {
        for (int b = 0; b < 6; ++b) {
            std::array<int, 3> ab{};
            for (int i = 0; i < 3; ++i)
                ab[i] = perms[a][perms[b][i]];
            t[a][b] = static_cast<int>(std::find(perms.begin(), perms.end(), ab) - perms.begin());
        }
    }
    return t;
}

GroupTable quaternion_group()
{
    // Element 4*s + u is (-1)^s times the unit u of {1, i, j, k}.
    static const int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int sign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
    GroupTable t(8, std::vector<int>(8));
    for (int a = 0; a < 8; ++a) {
        for (int b = 0; b < 8; ++b) {
            int s = (a / 4 + b / 4 + sign[a % 4][b % 4]) % 2;
            t[a][b] = 4 * s + unit[a % 4][b % 4];
        }
    }
    return t;
}

GroupTable trivial_group()
{
    return {{0}};
}

SetEnrichedCategory walking_idempotent()
{
    CategoryBuilder b;
    ObjectId x = b.add_object("*");
    MorphismId id = b.add_identity(x, "id");
    MorphismId phi = b.add_morphism("phi", x, x);
    b.set_composite(phi, phi, phi);
    (void)id;
    return {b.build(), {}};
}

SetEnrichedCategory delooping(const GroupTable& g)
{
    return {fincat::group_category(g), {}};
}

SetEnrichedCategory poset(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& less)
{
    std::vector<std::vector<bool>> le(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i)
        le[i][i] = true;
    for (auto [a, b] : less)
        le[a][b] = true;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (le[i][k] && le[k][j])
                    le[i][j] = true;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && le[i][j] && le[j][i])
                throw std::invalid_argument("relations contain a cycle");
    CategoryBuilder b;
    for (std::size_t i = 0; i < n; ++i)
        b.add_object(std::to_string(i));
    std::vector<std::vector<MorphismId>> arrow(n, std::vector<MorphismId>(n, -1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (!le[i][j])
                continue;
            std::string name = std::to_string(i) + "<=" + std::to_string(j);
            arrow[i][j] = i == j ? b.add_identity(static_cast<ObjectId>(i), name)
                                 : b.add_morphism(name, static_cast<ObjectId>(i), static_cast<ObjectId>(j));
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (le[i][j] && le[j][k] && i != j && j != k)
                    b.set_composite(arrow[j][k], arrow[i][j], arrow[i][k]);
    return {b.build(), {}};
}

SetEnrichedCategory free_monoid(std::size_t letters, std::size_t max_length)
{
    if (letters == 0 || letters > 26)
        throw std::invalid_argument("free monoid needs 1 to 26 letters");
    CategoryBuilder b;
    ObjectId x = b.add_object("*");
    std::vector<std::string> words{""};
    std::map<std::string, MorphismId> id;
    id[""] = b.add_identity(x, "1");
    std::vector<std::string> layer{""};
    for (std::size_t n = 1; n <= max_length; ++n) {
        std::vector<std::string> next;
        for (const auto& w : layer)
            for (std::size_t c = 0; c < letters; ++c)
                next.push_back(w + static_cast<char>('a' + c));
        for (const auto& w : next) {
            id[w] = b.add_morphism(w, x, x);
            words.push_back(w);
        }
        layer = std::move(next);
    }
    // g∘f is f followed by g.
    for (const auto& f : words) {
        if (f.empty())
            continue;
        for (const auto& g : words) {
            if (g.empty() || f.size() + g.size() > max_length)
                continue;
            b.set_composite(id.at(g), id.at(f), id.at(f + g));
        }
    }
    b.set_truncation("length > " + std::to_string(max_length));
    return {b.build_unchecked(), {}};
}

namespace {

using Constants = std::vector<std::vector<std::vector<mpq_class>>>;

Constants zero_constants(std::size_t n)
{
    return Constants(n, std::vector<std::vector<mpq_class>>(n, std::vector<mpq_class>(n)));
}

std::vector<mpq_class> constants_of(const LinearCategory& a, Constants& c)
{
    const std::size_t n = a.hom_dim(0, 0);
    c = zero_constants(n);
    const auto& m = a.compose(0, 0, 0);
    for (std::size_t col = 0; col < m.cols(); ++col)
        for (const auto& [k, v] : m.column(col))
            c[col / n][col % n][k] = v;
    return a.unit(0);
}

} // namespace

LinearCategory rationals()
{
    return algebra(linalg::parse_ring("Q"), {{{1}}}, {1});
}

LinearCategory zero_algebra()
{
    LinearCategory a(linalg::parse_ring("Q"), {"*"});
    a.set_unit(0, {});
    return a;
}

LinearCategory matrix_algebra(std::size_t n, const linalg::Ring& ring)
{
    const std::size_t d = n * n;
    Constants c = zero_constants(d);
    std::vector<mpq_class> unit(d);
    for (std::size_t a = 0; a < n; ++a) {
        unit[a * n + a] = 1;
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t e = 0; e < n; ++e)
                c[a * n + b][b * n + e][a * n + e] = 1;
    }
    return algebra(ring, c, unit);
}

LinearCategory group_algebra(const GroupTable& g, const linalg::Ring& ring)
{
    return linearize(fincat::group_category(g), ring);
}

LinearCategory triangular_algebra(const linalg::Ring& ring)
{
    // Basis e11, e12, e22.
    Constants c = zero_constants(3);
    c[0][0][0] = 1;
    c[0][1][1] = 1;
    c[1][2][1] = 1;
    c[2][2][2] = 1;
    return algebra(ring, c, {1, 0, 1});
}

LinearCategory truncated_polynomials(std::size_t n, const linalg::Ring& ring)
{
    Constants c = zero_constants(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; i + j < n; ++j)
            c[i][j][i + j] = 1;
    std::vector<mpq_class> unit(n);
    if (n)
        unit[0] = 1;
    return algebra(ring, c, unit);
}

LinearCategory product_algebra(const LinearCategory& a, const LinearCategory& b)
{
    if (a.object_count() != 1 || b.object_count() != 1 || !(a.ring() == b.ring()))
        throw std::invalid_argument("product_algebra needs two algebras over the same ring");
    Constants ca, cb;
    auto ua = constants_of(a, ca);
    auto ub = constants_of(b, cb);
    const std::size_t na = ua.size(), nb = ub.size();
    Constants c = zero_constants(na + nb);
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < na; ++j)
            for (std::size_t k = 0; k < na; ++k)
                c[i][j][k] = ca[i][j][k];
    for (std::size_t i = 0; i < nb; ++i)
        for (std::size_t j = 0; j < nb; ++j)
            for (std::size_t k = 0; k < nb; ++k)
                c[na + i][na + j][na + k] = cb[i][j][k];
    ua.insert(ua.end(), ub.begin(), ub.end());
    return algebra(a.ring(), c, ua);
}

LinearCategory random_algebra(std::mt19937& rng, std::size_t max_dim)
{
    const auto q = linalg::parse_ring("Q");
    std::vector<std::function<LinearCategory()>> pool = {
        [&] { return rationals(); },
        [&] { return product_algebra(rationals(), rationals()); },
        [&] { return group_algebra(cyclic_group(2), q); },
        [&] { return group_algebra(cyclic_group(3), q); },
        [&] { return truncated_polynomials(2, q); },
        [&] { return truncated_polynomials(3, q); },
        [&] { return triangular_algebra(q); },
        [&] { return product_algebra(group_algebra(cyclic_group(2), q), rationals()); },
        [&] { return matrix_algebra(2, q); },
        [&] { return group_algebra(cyclic_group(4), q); },
        [&] { return product_algebra(triangular_algebra(q), rationals()); },
        [&] { return truncated_polynomials(4, q); },
    };
    std::vector<LinearCategory> fits;
    for (const auto& make : pool) {
        auto a = make();
        if (a.hom_dim(0, 0) <= max_dim)
            fits.push_back(std::move(a));
    }
    if (fits.empty())
        throw std::invalid_argument("no sample algebra of that size");
    const LinearCategory base = fits[std::uniform_int_distribution<std::size_t>(0, fits.size() - 1)(rng)];
    Constants c;
    auto unit = constants_of(base, c);
    const std::size_t n = unit.size();

    // Random unimodular P as a product of elementary matrices; P and its
    // inverse are tracked together.
    std::vector<std::vector<mpq_class>> p(n, std::vector<mpq_class>(n)), pinv(n, std::vector<mpq_class>(n));
    for (std::size_t i = 0; i < n; ++i)
        p[i][i] = pinv[i][i] = 1;
    std::uniform_int_distribution<int> coeff(-2, 2);
    for (std::size_t step = 0; n > 1 && step < 3 * n; ++step) {
        std::size_t i = rng() % n, j = rng() % n;
        if (i == j)
            continue;
        int s = coeff(rng);
        // column_j += s * column_i on P; row_i -= s * row_j on P⁻¹.
        for (std::size_t r = 0; r < n; ++r)
            p[r][j] += s * p[r][i];
        for (std::size_t col = 0; col < n; ++col)
            pinv[i][col] -= s * pinv[j][col];
    }
    Constants out = zero_constants(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<mpq_class> e(n);
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = 0; b < n; ++b)
                    if (p[a][i] != 0 && p[b][j] != 0)
                        for (std::size_t k = 0; k < n; ++k)
                            e[k] += p[a][i] * p[b][j] * c[a][b][k];
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t m = 0; m < n; ++m)
                    out[i][j][k] += pinv[k][m] * e[m];
        }
    }
    std::vector<mpq_class> new_unit(n);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t m = 0; m < n; ++m)
            new_unit[k] += pinv[k][m] * unit[m];
    return algebra(q, out, new_unit);
}

} // namespace fh::enrich
