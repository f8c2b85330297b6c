#pragma once

/// \file
/// \brief Deterministic SVG drawing of a cluster and its golden-section segments.

#include <string>

#include "phihex/construction.hpp"

namespace phihex {

struct RenderOptions {
  /// Fractional digits of every emitted coordinate and length.
  int frac_digits = 12;
  /// Pixels per unit length; sets the width/height attributes.
  Rational canvas_scale = 100;
  bool show_labels = true;
  // Stroke widths, in multiples of the hexagon side.
  Rational hexagon_stroke{1, 50};
  Rational circle_stroke{1, 100};
  Rational tangent_stroke{1, 100};
  Rational segment_stroke{1, 40};
};

/// Standalone SVG 1.1 document. Layers, in order: hexagons, small, middle and
/// large circles, tangent lines, segments, point markers, labels. The output
/// is a pure function of the arguments.
/// Throws std::invalid_argument for frac_digits < 1 or canvas_scale <= 0.
std::string render_svg(const PhiReport& report, const Cluster& cluster, const RenderOptions& opts = {});

}  // namespace phihex
