// File emitters: palette tables as CSV/JSON, swatch strips as binary PPM
// (color band over its grayscale rendering), sweep reports, and the
// hue-versus-intensity curve data.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "chromascale/optimize.hpp"
#include "chromascale/scale.hpp"

namespace chromascale {

inline constexpr const char* kToolName = "chromascale";
inline constexpr const char* kToolVersion = "1.0.0";

// A scale packaged for serialization together with tool metadata.
struct PaletteDocument {
  std::string tool_name = kToolName;
  std::string tool_version = kToolVersion;
  ColorScale scale;
};

PaletteDocument make_document(ColorScale scale);

// Columns: s,theta_deg,chroma,intensity,R,G,B,gray. Fixed 6 decimals, LF
// endings; the hue field is empty where hue is undefined (gray stops).
void write_csv(std::ostream& out, const PaletteDocument& doc);

// Metadata block first, then stops; key order is fixed so identical inputs
// serialize to identical bytes. Undefined hue serializes as null.
void write_json(std::ostream& out, const PaletteDocument& doc);

// Binary PPM (P6, maxval 255), one pixel column per stop: swatch_height rows
// of the color band above swatch_height rows of its grayscale conversion.
// Components quantize as round(255*v) with no gamma transfer.
void write_ppm(std::ostream& out, const PaletteDocument& doc,
               int swatch_height);

// Columns: theta_start,avg_chroma; one row per grid candidate.
void write_sweep_table_csv(std::ostream& out, const SweepResult& result);

// Columns: i_min,i_max,theta_span,best_theta_start,best_avg_chroma; one row
// per sweep in the order given.
void write_sweep_summary_csv(std::ostream& out,
                             const std::vector<SweepResult>& results);

// Columns: hue,chroma_one_intensity, then one scale_intensity_span_<span>
// column per overlay giving the intensity at which that scale passes through
// the row's hue (empty when the scale skips the hue).
void write_hue_curve_csv(std::ostream& out, int samples_per_sector,
                         const std::vector<ColorScale>& overlays);

}  // namespace chromascale
