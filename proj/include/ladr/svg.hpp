#pragma once

#include <string>

#include "ladr/geometry.hpp"
#include "ladr/hitting.hpp"

namespace ladr {

// Optional layers drawn together: rectangles (instance + layout, with a dashed
// bounding box), points as dots, axis-parallel lines as full-extent strokes.
struct RenderContent {
    const Instance* instance = nullptr;
    const Layout* layout = nullptr;
    const PointSet* points = nullptr;
    const LineSet* lines = nullptr;
};

// Deterministic SVG document; byte-identical for identical content.
// Throws Error when there is nothing to draw.
std::string render_svg(const RenderContent& content);

}  // namespace ladr
