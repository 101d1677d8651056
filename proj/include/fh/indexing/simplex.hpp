#pragma once

#include <vector>

#include "fh/manifold/graph.hpp"

namespace fh::indexing {

/// ⟨n⟩: ⟨0⟩ = D⁰, otherwise a directed path with n edges.
manifold::GraphManifold standard_interval(int n);

/// A monotone map [m] -> [n].
struct SimplexMap {
    int m = 0;
    int n = 0;
    std::vector<int> values;

    int operator()(int i) const { return values[i]; }
    friend bool operator==(const SimplexMap&, const SimplexMap&) = default;
};

bool is_valid(const SimplexMap& f);
SimplexMap simplex_identity(int n);
/// δ_i : [n-1] -> [n], skipping i.
SimplexMap coface(int n, int i);
/// σ_i : [n+1] -> [n], hitting i twice.
SimplexMap codegeneracy(int n, int i);
/// i ↦ i + k, [m] -> [n].
SimplexMap interval_inclusion(int m, int n, int k);
/// g ∘ f. Throws std::invalid_argument on a level mismatch.
SimplexMap compose(const SimplexMap& g, const SimplexMap& f);

/// Endpoint-preserving maps (f(0) = 0, f(m) = n).
bool is_active(const SimplexMap& f);
/// Interval inclusions.
bool is_closed(const SimplexMap& f);

struct ActiveClosed {
    SimplexMap active;
    SimplexMap closed;
};

/// f = closed ∘ active.
ActiveClosed delta_op_factorize(const SimplexMap& f);

} // namespace fh::indexing
