#pragma once

#include <cstdint>
#include <vector>

namespace fh::indexing {

/// A morphism [m] -> [n] of the paracyclic category: a monotone map
/// f : ℤ -> ℤ with f(i + m + 1) = f(i) + n + 1, stored by f(0), ..., f(m).
struct ParacyclicOp {
    int m = 0;
    int n = 0;
    std::vector<std::int64_t> values;

    std::int64_t operator()(std::int64_t i) const;

    /// f(0) minus its residue mod n+1, so that f = normal form + offset.
    std::int64_t offset() const;

    friend bool operator==(const ParacyclicOp&, const ParacyclicOp&) = default;
    friend auto operator<=>(const ParacyclicOp&, const ParacyclicOp&) = default;
};

bool is_valid(const ParacyclicOp& f);
ParacyclicOp paracyclic_identity(int n);
/// τ_n : i ↦ i + 1 on level n, and its powers.
ParacyclicOp rotation(int n, std::int64_t power = 1);
/// Equivariant extensions of the simplicial cofaces and codegeneracies.
ParacyclicOp para_coface(int n, int i);
ParacyclicOp para_codegeneracy(int n, int i);

/// g ∘ f. Throws std::invalid_argument on a level mismatch.
ParacyclicOp paracyclic_compose(const ParacyclicOp& g, const ParacyclicOp& f);

/// Image in the cyclic category: the representative with f(0) ∈ {0, ..., n},
/// obtained by discarding multiples of the central rotation τ_n^{n+1}.
ParacyclicOp cyclic_reduce(const ParacyclicOp& f);

/// Every morphism [m] -> [n] with f(0) in [low, high), in lexicographic order.
std::vector<ParacyclicOp> paracyclic_homs(int m, int n, std::int64_t low, std::int64_t high);
/// The cyclic homs [m] -> [n], as normal forms.
std::vector<ParacyclicOp> cyclic_homs(int m, int n);

/// The degree-r subdivision functor: level n (n+1 points on the circle)
/// goes to level r(n+1)-1, the preimage under the r-fold cover; an
/// equivariant map is reread with the r-fold period.
struct CoverOperator {
    int r = 1;

    int level(int n) const { return r * (n + 1) - 1; }
    ParacyclicOp operator()(const ParacyclicOp& f) const;
};

/// Throws std::invalid_argument for r < 1.
CoverOperator cover_operator(int r);

} // namespace fh::indexing
