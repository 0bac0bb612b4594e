#pragma once

#include <string_view>

#include <json.hpp>

namespace datashare::detail {

// Parses a single YAML document limited to mappings, sequences and scalars
// into JSON. Plain scalars resolve to null, booleans, integers and floats
// where they match those forms; quoted scalars stay strings. An empty
// document yields null.
nlohmann::ordered_json parse_yaml_subset(std::string_view text);

}  // namespace datashare::detail
