#pragma once

#include "locsep/graph.hpp"
#include "locsep/separators.hpp"

#include <string>

namespace locsep {

/// Plot-ready documents. Each node carries the indices of the bags that
/// contain it; without a decomposition the tag lists are empty. Output is
/// byte-identical for identical inputs.
std::string export_json(const Graph& g, const Decomposition* deco = nullptr);
std::string export_dot(const Graph& g, const Decomposition* deco = nullptr);

} // namespace locsep
