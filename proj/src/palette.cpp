#include "chromascale/palette.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include "json.hpp"

namespace chromascale {

namespace {

std::string fixed6(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6f", value);
  return buf;
}

// Compact spelling for span values in column names: 360, -300, ...
std::string compact(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%g", value);
  return buf;
}

unsigned char quantize(double v) {
  return static_cast<unsigned char>(std::lround(255.0 * v));
}

}  // namespace

PaletteDocument make_document(ColorScale scale) {
  return PaletteDocument{kToolName, kToolVersion, std::move(scale)};
}

void write_csv(std::ostream& out, const PaletteDocument& doc) {
  out << "s,theta_deg,chroma,intensity,R,G,B,gray\n";
  for (const ScaleStop& stop : doc.scale.stops) {
    const std::string hue =
        stop.hci.hue_deg.has_value() ? fixed6(*stop.hci.hue_deg) : "";
    out << fixed6(stop.s) << ',' << hue << ',' << fixed6(stop.hci.chroma)
        << ',' << fixed6(stop.hci.intensity) << ',' << fixed6(stop.color.r)
        << ',' << fixed6(stop.color.g) << ',' << fixed6(stop.color.b) << ','
        << fixed6(intensity(stop.color)) << '\n';
  }
}

void write_json(std::ostream& out, const PaletteDocument& doc) {
  nlohmann::ordered_json root;
  root["metadata"] = {{"tool", doc.tool_name},
                      {"version", doc.tool_version},
                      {"theta_start_deg", doc.scale.spec.theta_start_deg},
                      {"theta_span_deg", doc.scale.spec.theta_span_deg},
                      {"intensity_min", doc.scale.spec.intensity_min},
                      {"intensity_max", doc.scale.spec.intensity_max},
                      {"samples", doc.scale.spec.samples}};
  nlohmann::ordered_json stops = nlohmann::ordered_json::array();
  for (const ScaleStop& stop : doc.scale.stops) {
    nlohmann::ordered_json row;
    row["s"] = stop.s;
    if (stop.hci.hue_deg.has_value()) {
      row["hue_deg"] = *stop.hci.hue_deg;
    } else {
      row["hue_deg"] = nullptr;
    }
    row["chroma"] = stop.hci.chroma;
    row["intensity"] = stop.hci.intensity;
    row["r"] = stop.color.r;
    row["g"] = stop.color.g;
    row["b"] = stop.color.b;
    row["gray"] = intensity(stop.color);
    stops.push_back(std::move(row));
  }
  root["stops"] = std::move(stops);
  out << root.dump(2) << '\n';
}

void write_ppm(std::ostream& out, const PaletteDocument& doc,
               int swatch_height) {
  if (swatch_height < 1) {
    throw std::invalid_argument("swatch_height must be positive");
  }
  const size_t width = doc.scale.stops.size();
  if (width == 0) {
    throw std::invalid_argument("scale has no stops");
  }
  std::string color_row;
  std::string gray_row;
  color_row.reserve(3 * width);
  gray_row.reserve(3 * width);
  for (const ScaleStop& stop : doc.scale.stops) {
    color_row.push_back(static_cast<char>(quantize(stop.color.r)));
    color_row.push_back(static_cast<char>(quantize(stop.color.g)));
    color_row.push_back(static_cast<char>(quantize(stop.color.b)));
    const char g8 = static_cast<char>(quantize(intensity(stop.color)));
    gray_row.push_back(g8);
    gray_row.push_back(g8);
    gray_row.push_back(g8);
  }
  out << "P6\n" << width << ' ' << 2 * swatch_height << "\n255\n";
  for (int y = 0; y < swatch_height; ++y) {
    out.write(color_row.data(), static_cast<std::streamsize>(color_row.size()));
  }
  for (int y = 0; y < swatch_height; ++y) {
    out.write(gray_row.data(), static_cast<std::streamsize>(gray_row.size()));
  }
}

void write_sweep_table_csv(std::ostream& out, const SweepResult& result) {
  out << "theta_start,avg_chroma\n";
  for (const auto& [theta, avg] : result.table) {
    out << fixed6(theta) << ',' << fixed6(avg) << '\n';
  }
}

void write_sweep_summary_csv(std::ostream& out,
                             const std::vector<SweepResult>& results) {
  out << "i_min,i_max,theta_span,best_theta_start,best_avg_chroma\n";
  for (const SweepResult& r : results) {
    out << fixed6(r.spec.intensity_min) << ',' << fixed6(r.spec.intensity_max)
        << ',' << fixed6(r.spec.theta_span_deg) << ','
        << fixed6(r.best_theta_start_deg) << ',' << fixed6(r.best_avg_chroma)
        << '\n';
  }
}

void write_hue_curve_csv(std::ostream& out, int samples_per_sector,
                         const std::vector<ColorScale>& overlays) {
  out << "hue,chroma_one_intensity";
  for (const ColorScale& overlay : overlays) {
    out << ",scale_intensity_span_" << compact(overlay.spec.theta_span_deg);
  }
  out << '\n';
  for (const auto& [hue, i0] : chroma_one_curve(samples_per_sector)) {
    out << fixed6(hue) << ',' << fixed6(i0);
    for (const ColorScale& overlay : overlays) {
      const std::optional<double> value =
          scale_intensity_at_hue(overlay.spec, hue);
      out << ',';
      if (value.has_value()) {
        out << fixed6(*value);
      }
    }
    out << '\n';
  }
}

}  // namespace chromascale
