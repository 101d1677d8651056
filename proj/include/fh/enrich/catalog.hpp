#pragma once

#include <cstddef>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "fh/enrich/category.hpp"

namespace fh::enrich {

using GroupTable = std::vector<std::vector<int>>;

GroupTable cyclic_group(int n);
GroupTable symmetric_group3();
GroupTable quaternion_group();
GroupTable trivial_group();

/// The walking idempotent: one object "*", morphisms "id" and "phi" with
/// phi∘phi = phi.
SetEnrichedCategory walking_idempotent();
/// BG with morphisms g0..g_{n-1}, g0 the identity.
SetEnrichedCategory delooping(const GroupTable& g);
/// The poset on 0..n-1 with the given strict relations (closed under
/// transitivity here). Morphisms are "i<=j".
SetEnrichedCategory poset(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& less);
/// The free monoid on `letters` letters (a, b, c, ...) as a one-object
/// category truncated at word length `max_length`. The identity is "1".
SetEnrichedCategory free_monoid(std::size_t letters, std::size_t max_length);

LinearCategory rationals();
/// The zero ring as a category with one object and a rank-0 endomorphism module.
LinearCategory zero_algebra();
LinearCategory matrix_algebra(std::size_t n, const linalg::Ring& ring);
LinearCategory group_algebra(const GroupTable& g, const linalg::Ring& ring);
/// Upper triangular 2x2 matrices.
LinearCategory triangular_algebra(const linalg::Ring& ring);
/// ring[x]/(x^n).
LinearCategory truncated_polynomials(std::size_t n, const linalg::Ring& ring);
/// A × B as a one-object category.
LinearCategory product_algebra(const LinearCategory& a, const LinearCategory& b);

/// A known associative algebra of rank ≤ max_dim presented in a random
/// basis (a random unimodular integer change of basis).
LinearCategory random_algebra(std::mt19937& rng, std::size_t max_dim);

} // namespace fh::enrich
