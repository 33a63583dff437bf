#pragma once

// SVG picture of the real points of an arrangement in one affine chart.
// Display only: nothing computed here feeds back into the exact analysis.

#include <array>
#include <map>
#include <optional>
#include <string>

#include "zpair/arrangement.hpp"

namespace zpair {

struct RenderConfig {
  /// Coordinate set to 1: 'x', 'y' or 'z'.
  char chart = 'z';
  /// xmin, xmax, ymin, ymax; when unset, fitted to the marked singular
  /// points (all rational singular points if none is marked).
  std::optional<std::array<Rational, 4>> window;
  double stroke_width = 2.0;
  /// Samples along the conic; at least 16.
  unsigned samples = 720;
  /// Per-label stroke colors; a fixed palette fills the rest.
  std::map<std::string, std::string> colors;
};

/// Throws InputError for a degenerate window, an unknown chart or too few
/// samples.
void validate(const RenderConfig& config);

/// Deterministic SVG. One <g class="component"> per component, one
/// <g class="marker"> per non-node rational singular point in the window.
/// Such points on the line at infinity of the chart sit on the frame, in
/// their direction.
std::string render_svg(const Arrangement& a, const RenderConfig& config);

}  // namespace zpair
