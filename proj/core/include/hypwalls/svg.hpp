#pragma once

#include <optional>
#include <string>

#include "hypwalls/domains.hpp"

namespace hypwalls {

// 2D slice of a domain: Im z = value (horizontal, t runs along Re) or
// Re z = value (vertical, t runs along Im).
struct SliceSpec {
    enum class Axis { ImEquals, ReEquals } axis = Axis::ImEquals;
    double value = 0.0;
};

// Deterministic SVG of the slice: wall cross-sections (half-circles and
// vertical lines in the (t, r) half-plane), prism outline, shaded domain
// region. 1 boundary unit = 100 px, origin centered on the horizontal axis.
// When `face_filter` is given, only those walls are drawn.
std::string render_slice_svg(const DomainSpec& dom, const SliceSpec& slice,
                             const std::optional<std::vector<Face>>& face_filter = std::nullopt);

void render_slice_file(const DomainSpec& dom, const SliceSpec& slice, const std::string& path,
                       const std::optional<std::vector<Face>>& face_filter = std::nullopt);

}  // namespace hypwalls
