#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include <json.hpp>

#include "fh/enrich/category.hpp"
#include "fh/fincat/category.hpp"
#include "fh/manifold/graph.hpp"

namespace fh::facthom {

/// π₀ of THH in finite sets: endomorphisms modulo g∘f ~ f∘g.
struct TraceClassTable {
    struct TraceClass {
        fincat::MorphismId rep;                 // least name among members
        std::vector<fincat::MorphismId> members; // increasing ids
    };
    /// Endomorphisms of each object, increasing ids.
    std::vector<std::vector<fincat::MorphismId>> endomorphisms;
    /// Class index of each endomorphism; nullopt for other morphisms.
    std::vector<std::optional<std::size_t>> class_of;
    /// Classes numbered by their least member.
    std::vector<TraceClass> classes;
};

/// Saturates the relation over every defined pair f : x -> y, g : y -> x
/// with both composites defined. In a truncated category the relation is
/// the one visible below the bound.
TraceClassTable thh_set_pi0(const fincat::FinCategory& c);

/// The class of a cyclic word (a_0 then a_1 ... then a_n); nullopt when the
/// composite lies past the truncation bound.
std::optional<std::size_t> class_of_word(const fincat::FinCategory& c, const TraceClassTable& table,
                                         const std::vector<fincat::MorphismId>& word);

/// The same classes as the coequalizer of d_0, d_1 : (cyclic bar)_1 ⇉ (cyclic bar)_0,
/// given as a class label per endomorphism in increasing id order.
/// Non-truncated categories only.
std::vector<std::size_t> thh_set_pi0_coequalizer(const fincat::FinCategory& c, std::size_t* class_count = nullptr);

nlohmann::json to_json(const TraceClassTable& table, const fincat::FinCategory& c);

/// π₀ of factorization homology of M: the disk-stratified part evaluated on
/// labelings, times one copy of the trace classes per circle.
struct FacthomCount {
    std::size_t graph_part = 1;
    std::vector<std::size_t> circle_parts;
    std::size_t total = 1;
};
FacthomCount facthom_set_pi0(const manifold::GraphManifold& m, const enrich::SetEnrichedCategory& c);

} // namespace fh::facthom
