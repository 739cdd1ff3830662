#pragma once

#include <string>

#include "carterlab/perm_group.hpp"

namespace carterlab {

/// {"degree": n, "generators": [[cycle, ...], ...]}, disjoint cycles of
/// 0-based points, fixed points omitted.
std::string generators_to_json(const PermGroup& g);
/// Inverse of generators_to_json. Throws std::invalid_argument on malformed
/// input, overlapping cycles or out-of-range points.
PermGroup generators_from_json(const std::string& text);
PermGroup load_generators(const std::string& path);

}  // namespace carterlab
