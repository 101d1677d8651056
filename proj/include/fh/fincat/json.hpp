#pragma once

#include <json.hpp>

#include "fh/fincat/category.hpp"

namespace fh::fincat {

/// Throws SchemaError when the document does not have the interchange shape.
/// Semantic checks are left to validate_category.
CategoryTable category_table_from_json(const nlohmann::json& doc);
nlohmann::json to_json(const CategoryTable& table);

} // namespace fh::fincat
