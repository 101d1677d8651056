#pragma once

#include <concepts>
#include <cstddef>
#include <string>
#include <vector>

#include "fh/linalg/sparse.hpp"

namespace fh::enrich {

/// What the engines need from an enrichment: a unit value, a binary tensor
/// and a tensor of a finite family.
template <class B>
concept EnrichmentBackend = requires(const B& b, const typename B::Value& v, const std::vector<typename B::Value>& vs) {
    { b.unit() } -> std::convertible_to<typename B::Value>;
    { b.tensor(v, v) } -> std::convertible_to<typename B::Value>;
    { b.tensor_all(vs) } -> std::convertible_to<typename B::Value>;
    { b.same(v, v) } -> std::convertible_to<bool>;
};

/// Finite sets {0..n-1}, tensored by cartesian product. Elements of a
/// product are encoded in mixed radix with the first factor most significant.
struct FinSetBackend {
    using Value = std::size_t;
    static constexpr bool cartesian = true;

    Value unit() const { return 1; }
    Value tensor(Value a, Value b) const { return a * b; }
    Value tensor_all(const std::vector<Value>& family) const;
    bool same(Value a, Value b) const { return a == b; }

    static std::size_t encode(const std::vector<std::size_t>& sizes, const std::vector<std::size_t>& coords);
    static std::vector<std::size_t> decode(const std::vector<std::size_t>& sizes, std::size_t element);
};

/// A based free module: the rank is the number of basis labels.
struct BasedModule {
    std::vector<std::string> basis;
    std::size_t dim() const { return basis.size(); }
    friend bool operator==(const BasedModule&, const BasedModule&) = default;
};

/// Based free modules over ℤ, ℚ or 𝔽_p with the based tensor product.
/// The basis of a ⊗ b is a_i ⊗ b_j in lexicographic order.
struct ExactLinearBackend {
    using Value = BasedModule;
    static constexpr bool cartesian = false;

    linalg::Ring ring;

    Value unit() const { return {{"1"}}; }
    Value tensor(const Value& a, const Value& b) const;
    Value tensor_all(const std::vector<Value>& family) const;
    /// Based modules are isomorphic exactly when their ranks agree.
    bool same(const Value& a, const Value& b) const { return a.dim() == b.dim(); }
};

static_assert(EnrichmentBackend<FinSetBackend>);
static_assert(EnrichmentBackend<ExactLinearBackend>);

/// Kronecker product of matrices, matching the basis order of the tensor.
linalg::SparseMatrix kronecker(const linalg::SparseMatrix& a, const linalg::SparseMatrix& b);

} // namespace fh::enrich
