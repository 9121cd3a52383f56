#pragma once

#include <filesystem>

#include <json.hpp>

#include "ncfrieze/frieze.hpp"
#include "ncfrieze/quiddity.hpp"

namespace ncfrieze {

// All files are JSON with expression strings for ring elements (matrix
// elements as nested arrays of rational strings); see README for the schemas.
// Serialization is deterministic: fixed key order, 2-space indent.
using Json = nlohmann::ordered_json;

Json descriptor_to_json(const RingDescriptor& ring);
RingDescriptor descriptor_from_json(const Json& j);

Json value_to_json(const RingValue& v);
RingValue value_from_json(const RingDescriptor& ring, const Json& j);

Json frieze_to_json(const Frieze& f);
Frieze frieze_from_json(const Json& j);

Json cycle_to_json(const QuiddityCycle& cycle);
QuiddityCycle cycle_from_json(const Json& j);

Frieze load_frieze(const std::filesystem::path& path);
QuiddityCycle load_cycle(const std::filesystem::path& path);
void save_json(const Json& j, const std::filesystem::path& path);
std::string json_to_string(const Json& j);

}  // namespace ncfrieze
