#pragma once

#include <json.hpp>

#include "datashare/schema.hpp"

namespace datashare::detail {

nlohmann::ordered_json schema_to_json_value(const TableSchema& schema);
TableSchema schema_from_json_value(const nlohmann::ordered_json& doc);

}  // namespace datashare::detail
