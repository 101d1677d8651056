#pragma once

#include <vector>

#include "fh/fincat/category.hpp"

namespace fh::fincat {

/// Left and right morphism classes of a candidate factorization system,
/// as membership flags indexed by morphism id.
struct FactorizationSystem {
    std::vector<bool> left;
    std::vector<bool> right;
};

/// f = right ∘ left.
struct Factorization {
    MorphismId left = -1;
    MorphismId right = -1;

    friend bool operator==(const Factorization&, const Factorization&) = default;
};

/// Every factorization of f with left part in the left class and right part
/// in the right class, ordered by (intermediate object, left, right).
std::vector<Factorization> all_factorizations(const FinCategory& c, const FactorizationSystem& fs, MorphismId f);

/// The first factorization in the order of all_factorizations. Throws
/// std::domain_error("no factorization") when none exists.
Factorization factorize_morphism(const FinCategory& c, const FactorizationSystem& fs, MorphismId f);

/// Number of isomorphisms u between the middles of a and b with
/// u∘a.left = b.left and b.right∘u = a.right.
std::size_t comparison_isomorphisms(const FinCategory& c, const Factorization& a, const Factorization& b);

/// Exhaustive check: both classes contain the isomorphisms and are closed
/// under composition, and every morphism factors uniquely up to unique
/// isomorphism.
ValidationReport validate_factorization_system(const FinCategory& c, const FactorizationSystem& fs);

/// The trivial systems [isos; all] and [all; isos].
FactorizationSystem isos_then_all(const FinCategory& c);
FactorizationSystem all_then_isos(const FinCategory& c);

} // namespace fh::fincat
