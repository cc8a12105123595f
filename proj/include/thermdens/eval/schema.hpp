#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace thermdens::eval {

// Checks a document against the subset of JSON Schema used by the
// published report schemas: type, required, properties,
// additionalProperties (bool), items, enum, minimum, maximum,
// exclusiveMinimum, minItems and local "$ref": "#/definitions/<name>".
// Returns one message per violation, each prefixed by its JSON pointer.
std::vector<std::string> validate_schema(const nlohmann::json& document, const nlohmann::json& schema);

}  // namespace thermdens::eval
