#pragma once

#include "properad/nested.hpp"

namespace properad {

// Deterministic Graphviz rendering: nesting as clusters, global inputs on
// top, outputs at the bottom.
std::string toDot(const NestedGraph& x);
std::string toDot(const IodaGraph& g);

}  // namespace properad
