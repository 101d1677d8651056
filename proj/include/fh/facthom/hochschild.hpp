#pragma once

#include <vector>

#include <json.hpp>

#include "fh/enrich/category.hpp"
#include "fh/facthom/cyclic_bar.hpp"
#include "fh/linalg/homology.hpp"

namespace fh::facthom {

/// The Hochschild complex (C_•, b) in degrees 0..top+1.
linalg::ChainComplex hochschild_complex(const CyclicBar& bar, int top);

/// HH_n for n = 0..n_max over the category's ring.
std::vector<linalg::HomologyGroup> hochschild_homology(const enrich::LinearCategory& c, int n_max);

/// Total complex of the first-quadrant (b, B) bicomplex: degree n is
/// ⊕_{i ≥ 0} C_{n-2i}, with blocks ordered by i.
linalg::ChainComplex cyclic_complex(const CyclicBar& bar, int top);

/// HC_n for n = 0..n_max.
std::vector<linalg::HomologyGroup> cyclic_homology(const enrich::LinearCategory& c, int n_max);

/// Negative cyclic homology in degrees 0..n_max from the product bicomplex
/// ∏_{0 ≤ i ≤ i_max} C_{n+2i}. The truncation is exact in these degrees
/// when HH vanishes above degree 2·i_max.
struct NegativeCyclic {
    int truncation = 0;
    std::vector<linalg::HomologyGroup> groups;
};
NegativeCyclic negative_cyclic(const enrich::LinearCategory& c, int n_max, int i_max);

nlohmann::json to_json(const std::vector<linalg::HomologyGroup>& groups);

} // namespace fh::facthom
