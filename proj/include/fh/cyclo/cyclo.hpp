#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "fh/enrich/catalog.hpp"
#include "fh/facthom/trace.hpp"
#include "fh/fincat/category.hpp"

namespace fh::cyclo {

/// A map on trace classes. image[k] is unset when no member of class k has
/// its power below the truncation bound. well_defined records whether all
/// members with a defined power agreed.
struct ClassMap {
    std::vector<std::optional<std::size_t>> image;
    bool well_defined = true;
};

/// ψ_r : [g] ↦ [g^r]. Throws std::invalid_argument for r < 1.
ClassMap psi_r(const fincat::FinCategory& c, const facthom::TraceClassTable& table, int r);

/// The trace classes with the repetition operators for a set of degrees.
/// Rotation acts trivially on classes and is not stored.
struct CycloAction {
    facthom::TraceClassTable table;
    std::map<int, ClassMap> psi;
};
CycloAction cyclo_action(const fincat::FinCategory& c, const std::vector<int>& degrees);

inline const std::vector<int> default_degrees{2, 3};

/// Strict fixed points of the ψ_r on π₀. A class whose image is unknown for
/// some degree (truncation) and fixed for the others is undetermined.
struct Tc0 {
    std::vector<int> degrees;
    std::vector<std::size_t> fixed;
    std::vector<std::size_t> undetermined;
    std::string model = "strict-pi0";
};
Tc0 tc0(const fincat::FinCategory& c, const facthom::TraceClassTable& table,
        const std::vector<int>& degrees = default_degrees);

/// x ↦ [id_x].
std::vector<std::size_t> trace0(const fincat::FinCategory& c, const facthom::TraceClassTable& table);

nlohmann::json to_json(const Tc0& t, const fincat::FinCategory& c, const facthom::TraceClassTable& table);
nlohmann::json trace_to_json(const std::vector<std::size_t>& trace, const fincat::FinCategory& c,
                             const facthom::TraceClassTable& table);

/// Conjugacy classes of a finite group in order of least element, with the
/// order of the centralizer of each.
struct FreeLoopCensus {
    std::size_t class_count = 0;
    std::vector<std::vector<int>> classes;
    std::vector<std::size_t> centralizer_orders;
};
FreeLoopCensus free_loop_census(const enrich::GroupTable& g);

/// counts[n] = number of words of length n over m letters up to rotation,
/// for n = 0..n_max, found by keeping the least rotation of each word.
/// Throws std::invalid_argument for m < 1.
std::vector<std::size_t> configuration_census(std::size_t m, std::size_t n_max);

/// Least rotation of a word.
std::string least_rotation(const std::string& word);

} // namespace fh::cyclo
