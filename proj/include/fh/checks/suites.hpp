#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

namespace fh::checks {

struct SuiteResult {
    std::string suite;
    std::size_t passed = 0;
    std::size_t failed = 0;
    /// Descriptions of the first failures.
    std::vector<std::string> failures;

    bool ok() const { return failed == 0; }
};

/// fincat, manifold, indexing, corr, facthom, cyclo.
const std::vector<std::string>& suite_names();

/// Runs a named invariant suite with a fixed seed. Throws
/// std::invalid_argument for an unknown name.
SuiteResult run_suite(const std::string& name, unsigned seed = 1);

nlohmann::json to_json(const SuiteResult& r);

} // namespace fh::checks
