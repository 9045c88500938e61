#pragma once

#include <string>

#include "dualbraid/verify.hpp"

namespace dualbraid {

/// Batch SVG plot of the positive cluster fan. Rank 1: a single ray. Rank 2:
/// rays at the positive roots with the facet sectors shaded. Rank 3: cone
/// generators projected to the unit disk, facet triangles drawn as chords.
/// Deterministic layout; throws on rank > 3.
void emit_fan_svg(const GroupContext& ctx, const std::string& path);

}  // namespace dualbraid
