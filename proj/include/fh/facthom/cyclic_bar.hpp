#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "fh/enrich/backend.hpp"
#include "fh/enrich/category.hpp"
#include "fh/fincat/category.hpp"
#include "fh/linalg/sparse.hpp"

namespace fh::facthom {

/// Level n of the cyclic bar construction of a category in finite sets:
/// cyclic strings (a_0, ..., a_n) with a_i : x_i -> x_{i+1} and a_n : x_n -> x_0,
/// in lexicographic order of morphism ids.
///   d_i, i < n: replace a_i, a_{i+1} by a_{i+1}∘a_i
///   d_n: (a_0∘a_n, a_1, ..., a_{n-1})
///   s_i: insert the identity of x_{i+1} after a_i
///   t:   (a_n, a_0, ..., a_{n-1})
struct CyclicBarLevel {
    int n = 0;
    std::vector<std::vector<fincat::MorphismId>> elements;
    std::vector<std::vector<std::size_t>> faces;        // into level n-1
    std::vector<std::vector<std::size_t>> degeneracies; // into level n+1, empty at the top
    std::vector<std::size_t> cyclic;
};

/// Levels 0..top. Throws std::domain_error for truncated categories.
std::vector<CyclicBarLevel> cyclic_bar_levels(const fincat::FinCategory& c, int top);

/// The cyclic bar construction of a linear category as a cyclic module.
/// Basis of C_n: (x_0..x_n | i_0..i_n) with i_k a basis index of
/// hom(x_k, x_{k+1}), objects then indices in lexicographic order.
/// Operators are computed on demand and cached.
class CyclicBar {
public:
    explicit CyclicBar(const enrich::LinearCategory& c);

    const enrich::LinearCategory& category() const { return c_; }
    std::size_t dim(int n) const;
    enrich::BasedModule level(int n) const;

    /// d_i : C_n -> C_{n-1}.
    linalg::SparseMatrix face(int n, int i) const;
    /// s_i : C_n -> C_{n+1}, the identity inserted after a_i.
    linalg::SparseMatrix degeneracy(int n, int i) const;
    /// b = Σ (-1)^i d_i : C_n -> C_{n-1}; zero for n = 0.
    const linalg::SparseMatrix& boundary(int n) const;
    /// Cyclic permutation t and its signed form λ = (-1)^n t.
    linalg::SparseMatrix cyclic(int n) const;
    linalg::SparseMatrix lambda(int n) const;
    /// N = Σ_k λ^k.
    linalg::SparseMatrix norm(int n) const;
    /// s = (1_{x_0}, a_0, ..., a_n) : C_n -> C_{n+1}.
    linalg::SparseMatrix extra_degeneracy(int n) const;
    /// Connes' B = (1 - λ) s N : C_n -> C_{n+1}.
    const linalg::SparseMatrix& connes_B(int n) const;

private:
    struct Basis {
        std::vector<std::vector<std::size_t>> objects;
        std::vector<std::vector<std::size_t>> indices;
        std::map<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>, std::size_t> lookup;
    };
    const Basis& basis(int n) const;

    enrich::LinearCategory c_;
    mutable std::map<int, Basis> bases_;
    mutable std::map<int, linalg::SparseMatrix> boundaries_;
    mutable std::map<int, linalg::SparseMatrix> connes_;
};

/// B : C_n -> C_{n+1} of the cyclic bar construction of c.
linalg::SparseMatrix connes_B(const enrich::LinearCategory& c, int n);

} // namespace fh::facthom
