#include "chromascale/scale.hpp"

#include <cmath>
#include <stdexcept>

namespace chromascale {

namespace {

struct StopParams {
  double s;
  double theta;  // normalized to [0,360)
  double intensity;
};

StopParams stop_params(const ScaleSpec& spec, int j) {
  const double s = static_cast<double>(j) / (spec.samples - 1);
  return {s, normalize_degrees(spec.theta_start_deg + s * spec.theta_span_deg),
          std::lerp(spec.intensity_min, spec.intensity_max, s)};
}

}  // namespace

void validate(const ScaleSpec& spec) {
  if (!std::isfinite(spec.theta_start_deg)) {
    throw std::invalid_argument("theta_start_deg must be finite");
  }
  if (!std::isfinite(spec.theta_span_deg) || spec.theta_span_deg == 0.0) {
    throw std::invalid_argument("theta_span_deg must be nonzero");
  }
  if (!(std::fabs(spec.theta_span_deg) <= 360.0)) {
    throw std::invalid_argument("|theta_span_deg| must be at most 360");
  }
  if (!(spec.intensity_min >= 0.0 && spec.intensity_min <= 1.0) ||
      !(spec.intensity_max >= 0.0 && spec.intensity_max <= 1.0)) {
    throw std::invalid_argument("intensity bounds must lie in [0,1]");
  }
  if (!(spec.intensity_min < spec.intensity_max)) {
    throw std::invalid_argument(
        "intensity_min must be strictly below intensity_max");
  }
  if (spec.samples < 2) {
    throw std::invalid_argument("samples must be at least 2");
  }
}

ColorScale build_scale(const ScaleSpec& spec) {
  validate(spec);
  ColorScale scale{spec, {}};
  scale.stops.reserve(static_cast<size_t>(spec.samples));
  for (int j = 0; j < spec.samples; ++j) {
    const StopParams p = stop_params(spec, j);
    Rgb color = max_chroma_color(p.theta, p.intensity);
    const double chroma = chroma_of(color);
    std::optional<double> hue;
    if (chroma != 0.0) {
      hue = p.theta;  // report the analytic hue, not one re-derived from RGB
    }
    scale.stops.push_back({p.s, color, Hci(hue, chroma, p.intensity)});
  }
  return scale;
}

double average_chroma(const ColorScale& scale) {
  validate(scale.spec);
  if (static_cast<int>(scale.stops.size()) != scale.spec.samples) {
    throw std::invalid_argument("stop count does not match the spec");
  }
  const int n = scale.spec.samples;
  double sum =
      0.5 * (scale.stops.front().hci.chroma + scale.stops.back().hci.chroma);
  for (int j = 1; j + 1 < n; ++j) {
    sum += scale.stops[static_cast<size_t>(j)].hci.chroma;
  }
  return sum / (n - 1);
}

double average_chroma(const ScaleSpec& spec) {
  validate(spec);
  const int n = spec.samples;
  const auto chroma_at = [&spec](int j) {
    const StopParams p = stop_params(spec, j);
    return chroma_of(max_chroma_color(p.theta, p.intensity));
  };
  // Same accumulation order as the ColorScale overload so the two agree
  // bit for bit.
  double sum = 0.5 * (chroma_at(0) + chroma_at(n - 1));
  for (int j = 1; j + 1 < n; ++j) {
    sum += chroma_at(j);
  }
  return sum / (n - 1);
}

std::vector<std::pair<double, double>> chroma_one_curve(
    int samples_per_sector) {
  if (samples_per_sector < 1) {
    throw std::invalid_argument("samples_per_sector must be at least 1");
  }
  std::vector<std::pair<double, double>> rows;
  rows.reserve(static_cast<size_t>(6 * samples_per_sector + 1));
  for (int sector = 0; sector < 6; ++sector) {
    for (int j = 0; j < samples_per_sector; ++j) {
      const double hue = 60.0 * sector + 60.0 * j / samples_per_sector;
      rows.emplace_back(hue, critical_intensity(hue));
    }
  }
  rows.emplace_back(360.0, critical_intensity(360.0));
  return rows;
}

std::vector<std::pair<double, double>> scale_intensity_vs_hue(
    const ColorScale& scale) {
  std::vector<std::pair<double, double>> rows;
  rows.reserve(scale.stops.size());
  for (const ScaleStop& stop : scale.stops) {
    if (stop.hci.hue_deg.has_value()) {
      rows.emplace_back(*stop.hci.hue_deg, stop.hci.intensity);
    }
  }
  return rows;
}

std::optional<double> scale_position_of_hue(const ScaleSpec& spec,
                                            double hue_deg) {
  validate(spec);
  // Angular progress from the start to the requested hue, measured in the
  // traversal direction; beyond the span means the scale never gets there.
  const double progress =
      spec.theta_span_deg > 0.0
          ? normalize_degrees(hue_deg - spec.theta_start_deg)
          : normalize_degrees(spec.theta_start_deg - hue_deg);
  const double span = std::fabs(spec.theta_span_deg);
  if (progress > span) {
    return std::nullopt;
  }
  return progress / span;
}

std::optional<double> scale_intensity_at_hue(const ScaleSpec& spec,
                                             double hue_deg) {
  const std::optional<double> s = scale_position_of_hue(spec, hue_deg);
  if (!s.has_value()) {
    return std::nullopt;
  }
  return std::lerp(spec.intensity_min, spec.intensity_max, *s);
}

}  // namespace chromascale
