#pragma once

#include <optional>
#include <string>
#include <vector>

#include "minsurf/level_curve.hpp"
#include "minsurf/measures.hpp"

namespace minsurf {

/// Level curves in the (x1, x2) plane with equal aspect and 5% padding,
/// crossings marked, and an optional inset of L and L'' against t.
/// Throws DomainError for an empty curve list.
std::string svg_document(const std::vector<LevelCurve>& curves,
                         const std::optional<CircleLengthProfile>& profile = std::nullopt);

void render_svg(const std::vector<LevelCurve>& curves,
                const std::optional<CircleLengthProfile>& profile, const std::string& path);

}  // namespace minsurf
