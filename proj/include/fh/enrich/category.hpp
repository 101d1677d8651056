#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include <gmpxx.h>
#include <json.hpp>

#include "fh/fincat/category.hpp"
#include "fh/fincat/simplicial.hpp"
#include "fh/linalg/sparse.hpp"

namespace fh::enrich {

/// A category enriched in finite sets. The underlying groupoid ιC is discrete
/// unless `core` lists isomorphisms of C; the groupoid is then the one they
/// generate.
struct SetEnrichedCategory {
    fincat::FinCategory cat;
    std::vector<fincat::MorphismId> core;

    bool discrete_core() const { return core.empty(); }
};

/// Checks the category axioms and that every listed core morphism is
/// invertible.
ValidationReport validate_enriched_cat(const SetEnrichedCategory& c);

/// A category enriched in based free modules. Objects are 0..n-1; hom(x,y)
/// has rank hom_dim(x,y). compose(x,y,z) sends basis i ⊗ j of
/// hom(x,y) ⊗ hom(y,z) (row-major, index i*dim(y,z)+j) to hom(x,z): it is
/// "first i, then j".
class LinearCategory {
public:
    LinearCategory() = default;
    LinearCategory(linalg::Ring ring, std::vector<std::string> objects);

    const linalg::Ring& ring() const { return ring_; }
    std::size_t object_count() const { return objects_.size(); }
    const std::string& object_name(std::size_t x) const { return objects_[x]; }
    std::size_t hom_dim(std::size_t x, std::size_t y) const;

    void set_hom_dim(std::size_t x, std::size_t y, std::size_t dim);
    /// Coefficient of basis k of hom(x,z) in (basis i of hom(x,y) then basis j
    /// of hom(y,z)).
    void set_constant(std::size_t x, std::size_t y, std::size_t z, std::size_t i, std::size_t j, std::size_t k,
                      const mpq_class& value);
    void set_unit(std::size_t x, std::vector<mpq_class> coords);

    /// The matrix hom(x,y) ⊗ hom(y,z) -> hom(x,z).
    const linalg::SparseMatrix& compose(std::size_t x, std::size_t y, std::size_t z) const;
    const std::vector<mpq_class>& unit(std::size_t x) const { return units_[x]; }

    /// μ(a, b) = "a then b" for coordinate vectors a ∈ hom(x,y), b ∈ hom(y,z).
    std::vector<mpq_class> multiply(std::size_t x, std::size_t y, std::size_t z, const std::vector<mpq_class>& a,
                                    const std::vector<mpq_class>& b) const;

    /// Total rank of all homs.
    std::size_t total_dim() const;

private:
    linalg::Ring ring_;
    std::vector<std::string> objects_;
    std::vector<std::size_t> dims_;
    std::vector<std::vector<mpq_class>> units_;
    std::map<std::tuple<std::size_t, std::size_t, std::size_t>, linalg::SparseMatrix> compose_;
    linalg::SparseMatrix zero_;
};

/// One-object linear category from structure constants c[i][j][k]:
/// e_i then e_j = Σ_k c[i][j][k] e_k.
LinearCategory algebra(linalg::Ring ring, const std::vector<std::vector<std::vector<mpq_class>>>& constants,
                       std::vector<mpq_class> unit);

/// Unit triangles on every pair and associativity on every object
/// quadruple, each failure listed separately. Entries must also lie in the
/// ring.
ValidationReport validate_enriched_cat(const LinearCategory& c);

/// The same presentation over another ring. Throws std::domain_error when a
/// coefficient has no image (e.g. 1/2 over ℤ or 𝔽_2).
LinearCategory change_ring(const LinearCategory& c, const linalg::Ring& ring);

/// Free module category ring[C]. Throws std::domain_error on a truncated C.
LinearCategory linearize(const fincat::FinCategory& c, const linalg::Ring& ring);

/// Interchange format {"ring","objects","hom_dims":{"x->y":n},
/// "structure_constants":{"x->y->z":[[[..]]]},"units":{"x":[..]}} with
/// rationals as integers or "p/q" strings. Throws SchemaError.
LinearCategory linear_category_from_json(const nlohmann::json& doc);
nlohmann::json to_json(const LinearCategory& c);

/// The nerve up to level `top`: level n lists the composable strings
/// (f_1, ..., f_n) in lexicographic order of morphism ids; level 0 is the
/// objects. Throws std::invalid_argument for a non-discrete core and
/// std::domain_error for a truncated category.
fincat::SimplicialSet nerve(const SetEnrichedCategory& c, int top);

} // namespace fh::enrich
