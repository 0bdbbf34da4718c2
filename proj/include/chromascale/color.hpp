// Conversions between RGB and hue/chroma/intensity, plus the closed-form
// solver for the most colorful RGB at a given hue and intensity.
#pragma once

#include <optional>

namespace chromascale {

// NTSC luma weights; intensity is the weighted average of R, G, B.
inline constexpr double kRedWeight = 0.299;
inline constexpr double kGreenWeight = 0.587;
inline constexpr double kBlueWeight = 0.114;

enum class Channel { Red = 0, Green = 1, Blue = 2 };

double channel_weight(Channel channel);

struct Rgb {
  double r = 0.0;
  double g = 0.0;
  double b = 0.0;

  Rgb() = default;
  // Throws std::invalid_argument if any component is outside [0,1].
  Rgb(double red, double green, double blue);

  double channel(Channel c) const;
};

// Weighted-average intensity (the grayscale value) of a color.
double intensity(const Rgb& color);

// Max component minus min component; 1 for pure hues, 0 for grays.
double chroma_of(const Rgb& color);

// The gray [I,I,I] with the same intensity as the input.
Rgb to_gray(const Rgb& color);

// Hue/chroma/intensity triple. Hue is absent exactly when chroma is zero:
// grays carry no hue. Construction validates ranges and that consistency.
struct Hci {
  std::optional<double> hue_deg;  // in [0,360) when present
  double chroma = 0.0;
  double intensity = 0.0;

  Hci() = default;
  Hci(std::optional<double> hue, double chroma_value, double intensity_value);
};

Hci rgb_to_hci(const Rgb& color);

// Reduce an angle to [0,360); negative angles wrap upward.
double normalize_degrees(double angle_deg);

// Shorter arc between two angles, in [0,180].
double circular_distance_deg(double a_deg, double b_deg);

// Hue determines which channel is largest, which is smallest, and the
// position k of the middle channel between them: k = (mid-min)/(max-min).
// The circle splits into six 60-degree sectors with a fixed channel order
// inside each one.
struct SectorDecomposition {
  int sector = 0;  // floor(hue/60), in 0..5
  Channel max_channel = Channel::Red;
  Channel mid_channel = Channel::Green;
  Channel min_channel = Channel::Blue;
  double k = 0.0;  // in [0,1], continuous across sector boundaries

  bool operator==(const SectorDecomposition&) const = default;
};

SectorDecomposition hue_decompose(double hue_deg);

// Place explicit max/mid/min values into their channel slots.
Rgb assemble(const SectorDecomposition& d, double max_value, double mid_value,
             double min_value);

// Intensity of the fully saturated color at this hue (max = 1, min = 0).
// Chroma at fixed hue peaks exactly at this intensity.
double critical_intensity(double hue_deg);

// The unique color with the given hue and intensity whose chroma is maximal.
// It always lies on the boundary of the RGB cube: either the min component
// is 0 (intensity at or below critical) or the max component is 1 (above).
// At intensity 0 or 1 the result is black or white and hue is irrelevant.
Rgb max_chroma_color(double hue_deg, double target_intensity);

}  // namespace chromascale
