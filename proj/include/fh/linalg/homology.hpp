#pragma once

#include <cstddef>
#include <vector>

#include <gmpxx.h>
#include <json.hpp>

#include "fh/linalg/sparse.hpp"

namespace fh::linalg {

/// Rank over the ring (over ℤ, the rank over ℚ).
std::size_t rank(const SparseMatrix& m, const Ring& ring);

/// Nonzero invariant factors of an integer matrix in divisibility order.
/// Throws std::domain_error on non-integral entries.
std::vector<mpz_class> invariant_factors(const SparseMatrix& m);

/// A finitely generated module over the ring: free rank plus torsion
/// coefficients (always empty over a field).
struct ModuleInvariants {
    std::size_t rank = 0;
    std::vector<mpz_class> torsion;

    friend bool operator==(const ModuleInvariants&, const ModuleInvariants&) = default;
};

/// Cokernel of m : ring^cols -> ring^rows.
ModuleInvariants cokernel(const SparseMatrix& m, const Ring& ring);

/// A bounded chain complex: dims[n] = rank of C_n, boundary[n] : C_n -> C_{n-1}
/// for n >= 1 (boundary[0] is unused).
struct ChainComplex {
    Ring ring;
    std::vector<std::size_t> dims;
    std::vector<SparseMatrix> boundary;
};

struct HomologyGroup {
    int degree = 0;
    ModuleInvariants value;
};

/// H_n for n = 0..top. Needs boundaries up to top+1 (a missing C_{top+1} is
/// taken to be zero).
std::vector<HomologyGroup> homology(const ChainComplex& c, int top);

/// Checks boundary[n-1] * boundary[n] = 0 for all stored n.
bool is_complex(const ChainComplex& c);

nlohmann::json to_json(const HomologyGroup& h);

} // namespace fh::linalg
