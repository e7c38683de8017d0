#pragma once

#include <string>

#include "magiclab/labeling.hpp"

namespace magiclab {

std::string to_dot(const Digraph& d);

// Vertices render as "v:label", arcs carry their labels.
std::string to_dot(const TotalLabeling& f);

}  // namespace magiclab
