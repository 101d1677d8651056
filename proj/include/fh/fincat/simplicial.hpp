#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "fh/fincat/category.hpp"
#include "fh/fincat/set_diagram.hpp"

namespace fh::fincat {

/// A monotone map [m] -> [n] given by its values.
using MonotoneMap = std::vector<int>;

/// All monotone maps [m] -> [n] in lexicographic order of values.
std::vector<MonotoneMap> monotone_maps(int m, int n);

/// Δ restricted to the objects [0], ..., [top] with every monotone map.
/// Morphisms are named "[m>n]v0,v1,..."; composition is function composition.
FinCategory truncated_simplex_category(int top);

/// A simplicial set known up to level `top()`. Elements of level n are
/// 0..levels[n].size-1; faces[i] and degeneracies[i] are function tables.
struct SimplicialSet {
    struct Level {
        std::size_t size = 0;
        std::vector<std::vector<std::size_t>> faces;        // d_0..d_n : X_n -> X_{n-1}
        std::vector<std::vector<std::size_t>> degeneracies; // s_0..s_n : X_n -> X_{n+1}
    };
    std::vector<Level> levels;
    /// Optional human-readable element names per level.
    std::vector<std::vector<std::string>> labels;

    std::size_t top() const { return levels.empty() ? 0 : levels.size() - 1; }

    /// θ^* : X_n -> X_m for θ : [m] -> [n], via its epi-mono factorization.
    std::size_t act(const MonotoneMap& theta, int n, std::size_t x) const;
};

/// Simplicial identities on all levels (degeneracies from the top level
/// are not checked since X_{top+1} is not stored).
ValidationReport validate_simplicial(const SimplicialSet& s);

/// Vertex i of an n-simplex and the spine edge i -> i+1.
std::size_t vertex_of(const SimplicialSet& s, int n, std::size_t x, int i);
std::size_t spine_edge(const SimplicialSet& s, int n, std::size_t x, int i);

/// Whether X_n -> X_1 x_{X_0} ... x_{X_0} X_1 (n factors) is a bijection.
bool segal_map_bijective(const SimplicialSet& s, int n);
/// Segal condition on every stored level.
bool is_segal(const SimplicialSet& s);

/// Size of the iterated fiber product X_1 x_{X_0} ... x_{X_0} X_1 (n factors),
/// counted by dynamic programming over endpoints.
std::size_t spine_fiber_product_size(const SimplicialSet& s, int n);

/// The codiscrete category object on a set of `vertex_count` points: level n
/// is V^{n+1} (lexicographic, first coordinate most significant), faces
/// delete a coordinate, degeneracies repeat one.
SimplicialSet codiscrete(std::size_t vertex_count, int top);

/// Restriction of s to a set-valued diagram on Δ_{≤top}^op.
SetDiagram to_set_diagram(const SimplicialSet& s);

/// The free category generated by V under concatenation of sequences.
/// Non-identity morphisms v0 -> v1 are sequences (v0=w0, w1, ..., wm=v1)
/// with 1 <= m <= m_max, named "[w0,...,wm]"; identities are the length-0
/// sequences "[v]". Composites longer than m_max are reported as
/// bound-exceeded through the category's truncation marker.
FinCategory free_act(const std::vector<std::string>& vertices, int m_max);

/// Word length m of a morphism of free_act.
int free_act_length(const FinCategory& c, MorphismId f);

} // namespace fh::fincat
