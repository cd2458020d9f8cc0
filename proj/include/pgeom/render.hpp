#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "pgeom/perspective.hpp"

namespace pgeom {

struct Viewport {
    double width = 800;
    double height = 600;
    double scale = 100;
};

struct RenderOptions {
    // Relative clip margin applied on each side of the no-image plane.
    double near_margin = 1e-6;
    // Drop geometry behind the center instead of projecting it.
    bool front_only = false;
    // Also mark vanishing points of the scene's distinct edge directions.
    bool mark_edge_directions = false;
};

struct Segment2 {
    double x1, y1, x2, y2;
    std::size_t edge;
};

struct Marker2 {
    double x, y;
    std::string label;
};

struct TextNote {
    double x, y;
    std::string text;
};

struct RenderResult {
    std::vector<Segment2> segments;
    std::vector<Marker2> markers;
};

// Projects every edge onto the image plane chart. Edges crossing the
// no-image plane are clipped with the relative near margin; output order is
// the input edge order. The parallel version runs the per-edge kernel under
// OpenMP and produces output identical to the serial reference.
RenderResult render_scene(const Scene<double>& scene, const CentralProjection<double>& pr,
                          const RenderOptions& opts = {});
RenderResult render_scene_serial(const Scene<double>& scene, const CentralProjection<double>& pr,
                                 const RenderOptions& opts = {});

// Deterministic SVG: one line element per segment, a circle per marker,
// coordinates printed with 9 significant digits.
std::string svg_document(const RenderResult& result, const Viewport& vp,
                         const std::vector<TextNote>& notes = {});

}  // namespace pgeom
