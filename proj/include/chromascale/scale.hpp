// Color scales with linear hue and linear intensity, their average chroma,
// and the helper curves for plotting intensity against hue.
#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "chromascale/color.hpp"

namespace chromascale {

// A scale runs from theta_start to theta_start + theta_span in hue while its
// intensity rises from intensity_min to intensity_max, both linearly in the
// position s in [0,1]. Every stop takes the most colorful RGB available at
// its (hue, intensity).
struct ScaleSpec {
  double theta_start_deg = 0.0;
  double theta_span_deg = 360.0;  // signed; the sign sets traversal direction
  double intensity_min = 0.0;
  double intensity_max = 1.0;
  int samples = 256;  // stop count including both endpoints
};

// Throws std::invalid_argument unless intensity_min < intensity_max within
// [0,1], 0 < |theta_span_deg| <= 360, and samples >= 2.
void validate(const ScaleSpec& spec);

struct ScaleStop {
  double s = 0.0;
  Rgb color;
  Hci hci;  // hue is the analytic scale hue, absent at zero-chroma stops
};

struct ColorScale {
  ScaleSpec spec;
  std::vector<ScaleStop> stops;
};

ColorScale build_scale(const ScaleSpec& spec);

// Mean chroma along the scale: composite trapezoid rule over the uniform
// s-grid. The two overloads compute identical values; the spec overload
// skips materializing the stops (the optimizer calls it in a hot loop).
double average_chroma(const ColorScale& scale);
double average_chroma(const ScaleSpec& spec);

// Intensity of the fully saturated color per hue, sampled uniformly inside
// each 60-degree sector. Rows cover hue 0..360 inclusive; the breakpoints at
// the six pure colors are always sampled exactly. The curve is piecewise
// linear between them.
std::vector<std::pair<double, double>> chroma_one_curve(int samples_per_sector);

// (hue, intensity) pairs of the stops with defined hue, in stop order.
std::vector<std::pair<double, double>> scale_intensity_vs_hue(
    const ColorScale& scale);

// Position s at which the scale passes through the given hue, if it does.
// Full-circle scales cover every hue once; shorter spans leave a gap.
std::optional<double> scale_position_of_hue(const ScaleSpec& spec,
                                            double hue_deg);

// Intensity at which the scale passes through the given hue, if it does.
std::optional<double> scale_intensity_at_hue(const ScaleSpec& spec,
                                             double hue_deg);

}  // namespace chromascale
