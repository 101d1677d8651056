#pragma once

#include <utility>
#include <vector>

#include "fh/fincat/category.hpp"
#include "fh/fincat/factorization.hpp"

namespace fh::fincat {

/// A functor between finite categories, by its object and morphism tables.
struct Functor {
    std::vector<ObjectId> on_objects;
    std::vector<MorphismId> on_morphisms;
};

ValidationReport validate_functor(const FinCategory& source, const FinCategory& target, const Functor& f);

/// Whether morphism m of `total` is cocartesian for the functor p : total -> base,
/// decided by enumerating the universal property.
bool is_cocartesian(const FinCategory& total, const FinCategory& base, const Functor& p, MorphismId m);

/// E x_B Ar^{B_1}(B) with its projection to B through the target of the
/// arrow component. Objects are pairs (e, β : p(e) -> b) with β in the right
/// class; morphisms (ε, g) with β' ∘ p(ε) = g ∘ β.
struct FreeCocartesian {
    FinCategory total;
    Functor projection;
    std::vector<std::pair<ObjectId, MorphismId>> objects;    // (e, β)
    std::vector<std::pair<MorphismId, MorphismId>> morphisms; // (ε, g)
};

FreeCocartesian free_cocart_second_factor(const FinCategory& e, const FinCategory& b, const Functor& p,
                                          const FactorizationSystem& fs);

/// The distinguished lift of g : b -> b' at an object (e, β : p(e) -> b):
/// g∘β = r∘l is factored, l is lifted cocartesianly to ε in E, and the lift
/// is (ε, g) : (e, β) -> (l_! e, r).
struct CocartesianLift {
    MorphismId morphism = -1;
    Factorization square;
};

/// Throws std::domain_error when E has no cocartesian lift of the left part.
CocartesianLift cocartesian_lift(const FreeCocartesian& fc, const FinCategory& e, const FinCategory& b,
                                 const Functor& p, const FactorizationSystem& fs, ObjectId object, MorphismId g);

} // namespace fh::fincat
