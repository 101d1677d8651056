#include "fh/enrich/corr.hpp"

#include <stdexcept>

#include "fh/enrich/backend.hpp"

namespace fh::enrich {

using manifold::FinSpan;

Pushforward corr_pushforward(const FinSpan& span, const std::vector<std::size_t>& family)
{
    if (family.size() != span.left_size)
        throw std::invalid_argument("family is not indexed by the source of the span");
    Pushforward out{std::vector<std::size_t>(span.right_size, 1), std::vector<std::vector<std::size_t>>(span.right_size)};
    for (std::size_t u = 0; u < span.apex_size(); ++u) {
        out.factors[span.right[u]].push_back(u);
        out.values[span.right[u]] *= family[span.left[u]];
    }
    return out;
}

namespace {

struct ApexPair {
    std::size_t u;
    std::size_t v;
};

// The apex of b∘a in the order compose_spans produces it.
std::vector<ApexPair> composite_apex(const FinSpan& a, const FinSpan& b)
{
    std::vector<ApexPair> out;
    for (std::size_t u = 0; u < a.apex_size(); ++u)
        for (std::size_t v = 0; v < b.apex_size(); ++v)
            if (a.right[u] == b.left[v])
                out.push_back({u, v});
    return out;
}

std::vector<std::size_t> factor_sizes(const std::vector<std::size_t>& factor, const std::vector<std::size_t>& legs,
                                      const std::vector<std::size_t>& family)
{
    std::vector<std::size_t> sizes;
    for (std::size_t u : factor)
        sizes.push_back(family[legs[u]]);
    return sizes;
}

// Place values of a mixed-radix number, first digit most significant.
std::vector<std::size_t> strides(const std::vector<std::size_t>& sizes)
{
    std::vector<std::size_t> out(sizes.size());
    std::size_t acc = 1;
    for (std::size_t k = sizes.size(); k-- > 0;) {
        out[k] = acc;
        acc *= sizes[k];
    }
    return out;
}

// For the factor of b∘a over r: the digit sizes of a composite element and,
// for each digit (u,v), its place value inside the nested iterated encoding
// (outer digit v, inner digit u).
struct Nesting {
    std::vector<std::size_t> sizes;
    std::vector<std::size_t> weights;
};

Nesting nesting(const FinSpan& a, const FinSpan& b, const FinSpan& ba, const std::vector<ApexPair>& pairs,
                const Pushforward& first, const Pushforward& composite, const Pushforward& iterated,
                const std::vector<std::size_t>& family, std::size_t r)
{
    const auto& outer = composite.factors[r];
    const auto& vs = iterated.factors[r];
    const auto v_strides = strides(factor_sizes(vs, b.left, first.values));
    Nesting n{factor_sizes(outer, ba.left, family), {}};
    n.weights.reserve(outer.size());
    std::vector<std::vector<std::size_t>> u_strides(vs.size());
    for (std::size_t vi = 0; vi < vs.size(); ++vi)
        u_strides[vi] = strides(factor_sizes(first.factors[b.left[vs[vi]]], a.left, family));
    for (std::size_t p = 0; p < outer.size(); ++p) {
        const auto [u, v] = pairs[outer[p]];
        std::size_t vi = 0;
        while (vs[vi] != v)
            ++vi;
        const auto& us = first.factors[b.left[v]];
        std::size_t ui = 0;
        while (us[ui] != u)
            ++ui;
        n.weights.push_back(v_strides[vi] * u_strides[vi][ui]);
    }
    return n;
}

// Visits every element x of Π sizes in order with y = Σ digit·weight.
template <class F>
void odometer(const Nesting& n, std::size_t count, F&& visit)
{
    std::vector<std::size_t> digit(n.sizes.size(), 0);
    std::size_t y = 0;
    for (std::size_t x = 0; x < count; ++x) {
        if (!visit(x, y))
            return;
        for (std::size_t k = digit.size(); k-- > 0;) {
            if (++digit[k] < n.sizes[k]) {
                y += n.weights[k];
                break;
            }
            y -= (n.sizes[k] - 1) * n.weights[k];
            digit[k] = 0;
        }
    }
}

} // namespace

PushforwardWitness pushforward_witness(const FinSpan& a, const FinSpan& b, const std::vector<std::size_t>& family)
{
    const FinSpan ba = manifold::compose_spans(a, b);
    PushforwardWitness w;
    w.composite = corr_pushforward(ba, family);
    const Pushforward first = corr_pushforward(a, family);
    w.iterated = corr_pushforward(b, first.values);
    const auto pairs = composite_apex(a, b);

    w.bijection.resize(b.right_size);
    for (std::size_t r = 0; r < b.right_size; ++r) {
        const auto n = nesting(a, b, ba, pairs, first, w.composite, w.iterated, family, r);
        auto& table = w.bijection[r];
        table.resize(w.composite.values[r]);
        odometer(n, table.size(), [&](std::size_t x, std::size_t y) {
            table[x] = y;
            return true;
        });
    }
    return w;
}

bool witness_valid(const FinSpan& a, const FinSpan& b, const std::vector<std::size_t>& family,
                   const PushforwardWitness& w)
{
    const FinSpan ba = manifold::compose_spans(a, b);
    const Pushforward first = corr_pushforward(a, family);
    const Pushforward composite = corr_pushforward(ba, family);
    const Pushforward iterated = corr_pushforward(b, first.values);
    const auto pairs = composite_apex(a, b);
    if (w.bijection.size() != b.right_size || w.composite.values != composite.values ||
        w.iterated.values != iterated.values)
        return false;
    for (std::size_t r = 0; r < b.right_size; ++r) {
        if (composite.values[r] != iterated.values[r] || w.bijection[r].size() != composite.values[r])
            return false;
        // The (u,v) digit of x must be the u digit inside the v digit of its image.
        const auto n = nesting(a, b, ba, pairs, first, composite, iterated, family, r);
        std::vector<bool> hit(iterated.values[r], false);
        bool ok = true;
        odometer(n, w.bijection[r].size(), [&](std::size_t x, std::size_t y) {
            const std::size_t image = w.bijection[r][x];
            ok = image == y && !hit[image];
            if (ok)
                hit[image] = true;
            return ok;
        });
        if (!ok)
            return false;
    }
    return true;
}

FinSpan span_of_pointed_map(const PointedMap& f, std::size_t target_size)
{
    FinSpan out{f.size(), target_size, {}, {}};
    for (std::size_t s = 0; s < f.size(); ++s) {
        if (!f[s])
            continue;
        if (*f[s] >= target_size)
            throw std::out_of_range("pointed map leaves its target");
        out.left.push_back(s);
        out.right.push_back(*f[s]);
    }
    return out;
}

std::vector<std::size_t> pointed_monodromy(const PointedMap& f, std::size_t target_size,
                                           const std::vector<std::size_t>& family)
{
    std::vector<std::size_t> out(target_size, 1);
    for (std::size_t s = 0; s < f.size(); ++s)
        if (f[s])
            out[*f[s]] *= family[s];
    return out;
}

} // namespace fh::enrich
