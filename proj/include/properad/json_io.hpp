#pragma once

#include <json.hpp>

#include "properad/nested.hpp"

namespace properad {

using Json = nlohmann::ordered_json;

Json graphToJson(const IodaGraph& g);
IodaGraph graphFromJson(const Json& j);

Json surfaceToJson(const SurfaceType& s);
SurfaceType surfaceFromJson(const Json& j);

Json elementToJson(const Element& e);
Element elementFromJson(const Json& j);

Json nestedToJson(const NestedGraph& x);
NestedGraph nestedFromJson(const Json& j);

// Fixed dump settings so serialization round-trips byte for byte.
std::string toJsonString(const Json& j);

}  // namespace properad
