#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "fh/manifold/span.hpp"

namespace fh::enrich {

/// Pushforward of a family of finite sets along a span S <- U -> T:
/// value t is the product over ψ⁻¹(t) of V_φ(u). factors[t] lists ψ⁻¹(t) in
/// increasing order, which fixes the coordinate order of the product.
struct Pushforward {
    std::vector<std::size_t> values;
    std::vector<std::vector<std::size_t>> factors;
};

Pushforward corr_pushforward(const manifold::FinSpan& span, const std::vector<std::size_t>& family);

/// Witness that pushing along b∘a agrees with pushing along a then b:
/// bijection[r][x] is the element of (b_*(a_* V))_r corresponding to element
/// x of ((b∘a)_* V)_r. The composite apex is ordered as compose_spans does.
struct PushforwardWitness {
    Pushforward composite;
    Pushforward iterated;
    std::vector<std::vector<std::size_t>> bijection;
};

PushforwardWitness pushforward_witness(const manifold::FinSpan& a, const manifold::FinSpan& b,
                                       const std::vector<std::size_t>& family);

/// Checks that each bijection table is a permutation and that corresponding
/// elements have equal coordinates under the apex identification.
bool witness_valid(const manifold::FinSpan& a, const manifold::FinSpan& b, const std::vector<std::size_t>& family,
                   const PushforwardWitness& w);

/// A map of pointed finite sets S₊ -> T₊ with the base point as nullopt.
using PointedMap = std::vector<std::optional<std::size_t>>;

/// S <- f⁻¹(T) -> T.
manifold::FinSpan span_of_pointed_map(const PointedMap& f, std::size_t target_size);

/// Monodromy of the deloop of (Fin, ×): V ↦ (∏_{f(s)=t} V_s)_t, computed
/// directly from fibers of f.
std::vector<std::size_t> pointed_monodromy(const PointedMap& f, std::size_t target_size,
                                           const std::vector<std::size_t>& family);

} // namespace fh::enrich
