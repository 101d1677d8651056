#pragma once

#include <cstddef>
#include <vector>

#include "fh/manifold/morphism.hpp"

namespace fh::manifold {

/// S <- U -> T between finite sets {0..n-1}.
struct FinSpan {
    std::size_t left_size = 0;
    std::size_t right_size = 0;
    std::vector<std::size_t> left;  // U -> S
    std::vector<std::size_t> right; // U -> T

    std::size_t apex_size() const { return left.size(); }
};

FinSpan identity_span(std::size_t n);

/// Apex is the pullback U ×_T V, enumerated in lexicographic order.
/// Throws std::invalid_argument on mismatched middle sets.
FinSpan compose_spans(const FinSpan& a, const FinSpan& b);

/// Whether some bijection of apexes commutes with both legs.
bool span_isomorphic(const FinSpan& a, const FinSpan& b);

/// The span E(M) <- U -> E(N) with U the pairs (target edge, position in its
/// walk). Throws std::domain_error when either side has circles.
FinSpan strata_span(const StratMorphism& m);

} // namespace fh::manifold
