#include "chromascale/color.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace chromascale {

double channel_weight(Channel channel) {
  switch (channel) {
    case Channel::Red:
      return kRedWeight;
    case Channel::Green:
      return kGreenWeight;
    default:
      return kBlueWeight;
  }
}

Rgb::Rgb(double red, double green, double blue) : r(red), g(green), b(blue) {
  if (!(r >= 0.0 && r <= 1.0) || !(g >= 0.0 && g <= 1.0) ||
      !(b >= 0.0 && b <= 1.0)) {
    throw std::invalid_argument("rgb components must lie in [0,1]");
  }
}

double Rgb::channel(Channel c) const {
  switch (c) {
    case Channel::Red:
      return r;
    case Channel::Green:
      return g;
    default:
      return b;
  }
}

double intensity(const Rgb& color) {
  return kRedWeight * color.r + kGreenWeight * color.g + kBlueWeight * color.b;
}

double chroma_of(const Rgb& color) {
  return std::max({color.r, color.g, color.b}) -
         std::min({color.r, color.g, color.b});
}

Rgb to_gray(const Rgb& color) {
  const double i = intensity(color);
  return Rgb(i, i, i);
}

Hci::Hci(std::optional<double> hue, double chroma_value, double intensity_value)
    : hue_deg(hue), chroma(chroma_value), intensity(intensity_value) {
  if (!(chroma >= 0.0 && chroma <= 1.0)) {
    throw std::invalid_argument("chroma must lie in [0,1]");
  }
  if (!(intensity >= 0.0 && intensity <= 1.0)) {
    throw std::invalid_argument("intensity must lie in [0,1]");
  }
  if (hue_deg.has_value()) {
    if (chroma == 0.0) {
      throw std::invalid_argument("hue must be absent when chroma is zero");
    }
    if (!(*hue_deg >= 0.0 && *hue_deg < 360.0)) {
      throw std::invalid_argument("hue must lie in [0,360)");
    }
  } else if (chroma != 0.0) {
    throw std::invalid_argument("hue is required when chroma is nonzero");
  }
  // Only grays are feasible at the intensity extremes; the slack covers
  // rounding in weighted sums that land exactly on 0 or 1.
  if ((intensity == 0.0 || intensity == 1.0) && chroma > 1e-9) {
    throw std::invalid_argument("chroma must vanish at intensity 0 or 1");
  }
}

double normalize_degrees(double angle_deg) {
  if (!std::isfinite(angle_deg)) {
    throw std::invalid_argument("angle must be finite");
  }
  double a = std::fmod(angle_deg, 360.0);
  if (a < 0.0) {
    a += 360.0;
  }
  if (a >= 360.0) {  // adding 360 to a tiny negative can round up to 360
    a = 0.0;
  }
  return a == 0.0 ? 0.0 : a;  // never hand back -0.0
}

double circular_distance_deg(double a_deg, double b_deg) {
  const double d =
      std::fabs(normalize_degrees(a_deg) - normalize_degrees(b_deg));
  return std::min(d, 360.0 - d);
}

Hci rgb_to_hci(const Rgb& color) {
  const double hi = std::max({color.r, color.g, color.b});
  const double lo = std::min({color.r, color.g, color.b});
  const double chroma = hi - lo;
  const double i = intensity(color);
  if (chroma == 0.0) {
    return Hci(std::nullopt, 0.0, i);
  }
  // One formula per sector; ties between components land on a sector
  // boundary where the adjacent formulas agree.
  double hue;
  if (hi == color.r) {
    hue = (color.g >= color.b) ? 60.0 * (color.g - color.b) / chroma
                               : 360.0 - 60.0 * (color.b - color.g) / chroma;
  } else if (hi == color.g) {
    hue = (color.b <= color.r) ? 120.0 - 60.0 * (color.r - color.b) / chroma
                               : 120.0 + 60.0 * (color.b - color.r) / chroma;
  } else {
    hue = (color.g >= color.r) ? 240.0 - 60.0 * (color.g - color.r) / chroma
                               : 240.0 + 60.0 * (color.r - color.g) / chroma;
  }
  return Hci(normalize_degrees(hue), chroma, i);
}

SectorDecomposition hue_decompose(double hue_deg) {
  const double h = normalize_degrees(hue_deg);
  int sector = static_cast<int>(h / 60.0);
  if (sector > 5) {
    sector = 5;
  }
  const auto k = [](double value) { return std::clamp(value, 0.0, 1.0); };
  switch (sector) {
    case 0:
      return {0, Channel::Red, Channel::Green, Channel::Blue, k(h / 60.0)};
    case 1:
      return {1, Channel::Green, Channel::Red, Channel::Blue,
              k((120.0 - h) / 60.0)};
    case 2:
      return {2, Channel::Green, Channel::Blue, Channel::Red,
              k((h - 120.0) / 60.0)};
    case 3:
      return {3, Channel::Blue, Channel::Green, Channel::Red,
              k((240.0 - h) / 60.0)};
    case 4:
      return {4, Channel::Blue, Channel::Red, Channel::Green,
              k((h - 240.0) / 60.0)};
    default:
      return {5, Channel::Red, Channel::Blue, Channel::Green,
              k((360.0 - h) / 60.0)};
  }
}

Rgb assemble(const SectorDecomposition& d, double max_value, double mid_value,
             double min_value) {
  double v[3] = {0.0, 0.0, 0.0};
  v[static_cast<int>(d.max_channel)] = max_value;
  v[static_cast<int>(d.mid_channel)] = mid_value;
  v[static_cast<int>(d.min_channel)] = min_value;
  return Rgb(v[0], v[1], v[2]);
}

double critical_intensity(double hue_deg) {
  const SectorDecomposition d = hue_decompose(hue_deg);
  return channel_weight(d.max_channel) + channel_weight(d.mid_channel) * d.k;
}

Rgb max_chroma_color(double hue_deg, double target_intensity) {
  if (!(target_intensity >= 0.0 && target_intensity <= 1.0)) {
    throw std::invalid_argument("intensity must lie in [0,1]");
  }
  if (target_intensity == 0.0) {
    return Rgb(0.0, 0.0, 0.0);
  }
  if (target_intensity == 1.0) {
    return Rgb(1.0, 1.0, 1.0);
  }
  const SectorDecomposition d = hue_decompose(hue_deg);
  const double i0 =
      channel_weight(d.max_channel) + channel_weight(d.mid_channel) * d.k;
  if (target_intensity <= i0) {
    // Dark branch: keep the min channel at 0 and scale the rest up until the
    // intensity matches. Chroma here is the max component itself.
    const double top = target_intensity / i0;
    return assemble(d, top, d.k * top, 0.0);
  }
  // Bright branch: pin the max channel at 1 and raise the floor. The mid
  // channel keeps its relative position k between floor and ceiling.
  const double denom = channel_weight(d.mid_channel) * (1.0 - d.k) +
                       channel_weight(d.min_channel);
  double floor_value = (target_intensity - i0) / denom;
  if (floor_value > 1.0) {  // rounding guard for intensities just below 1
    floor_value = 1.0;
  }
  return assemble(d, 1.0, floor_value + d.k * (1.0 - floor_value), floor_value);
}

}  // namespace chromascale
