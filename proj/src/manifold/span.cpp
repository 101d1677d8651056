#include "fh/manifold/span.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace fh::manifold {

FinSpan identity_span(std::size_t n)
{
    FinSpan s{n, n, {}, {}};
    for (std::size_t i = 0; i < n; ++i) {
        s.left.push_back(i);
        s.right.push_back(i);
    }
    return s;
}

FinSpan compose_spans(const FinSpan& a, const FinSpan& b)
{
    if (a.right_size != b.left_size)
        throw std::invalid_argument("spans are not composable: middle sets differ");
    FinSpan out{a.left_size, b.right_size, {}, {}};
    for (std::size_t u = 0; u < a.apex_size(); ++u) {
        for (std::size_t v = 0; v < b.apex_size(); ++v) {
            if (a.right[u] == b.left[v]) {
                out.left.push_back(a.left[u]);
                out.right.push_back(b.right[v]);
            }
        }
    }
    return out;
}

bool span_isomorphic(const FinSpan& a, const FinSpan& b)
{
    if (a.left_size != b.left_size || a.right_size != b.right_size || a.apex_size() != b.apex_size())
        return false;
    // A span of finite sets is determined up to isomorphism by the multiset
    // of leg values over its apex.
    auto legs = [](const FinSpan& s) {
        std::vector<std::pair<std::size_t, std::size_t>> v;
        for (std::size_t u = 0; u < s.apex_size(); ++u)
            v.push_back({s.left[u], s.right[u]});
        std::sort(v.begin(), v.end());
        return v;
    };
    return legs(a) == legs(b);
}

FinSpan strata_span(const StratMorphism& m)
{
    if (!m.source.disk_stratified() || !m.target.disk_stratified())
        throw std::domain_error("strata span is only defined between disk-stratified manifolds");
    FinSpan s{static_cast<std::size_t>(m.source.edge_count()), static_cast<std::size_t>(m.target.edge_count()), {}, {}};
    for (int e = 0; e < m.target.edge_count(); ++e) {
        for (int piece : m.edge_paths[e]) {
            s.left.push_back(static_cast<std::size_t>(piece));
            s.right.push_back(static_cast<std::size_t>(e));
        }
    }
    return s;
}

} // namespace fh::manifold
