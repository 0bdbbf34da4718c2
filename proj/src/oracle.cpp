#include "chromascale/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace chromascale {

namespace {

// Boundary-path color at parameter p in [0,2]: p <= 1 scales (max, mid, min)
// = (p, k*p, 0) up from black; p > 1 lifts the floor, (1, u + k(1-u), u)
// with u = p - 1, ending at white.
Rgb path_color(const SectorDecomposition& d, double p) {
  if (p <= 1.0) {
    return assemble(d, p, d.k * p, 0.0);
  }
  const double u = p - 1.0;
  return assemble(d, 1.0, u + d.k * (1.0 - u), u);
}

}  // namespace

void validate(const OracleConfig& cfg) {
  if (cfg.grid_resolution < 11) {
    throw std::invalid_argument("grid_resolution must be at least 11");
  }
  if (!(cfg.hue_tolerance_deg > 0.0) || !(cfg.intensity_tolerance > 0.0)) {
    throw std::invalid_argument("tolerances must be positive");
  }
}

OracleResult brute_force_max_chroma(double hue_deg, double target_intensity,
                                    const OracleConfig& cfg) {
  validate(cfg);
  if (!(target_intensity >= 0.0 && target_intensity <= 1.0)) {
    throw std::invalid_argument("intensity must lie in [0,1]");
  }
  const SectorDecomposition d = hue_decompose(hue_deg);

  // Walk both segments coarsely to bracket the target intensity.
  const int n = 2 * cfg.grid_resolution;
  double lo = 0.0;
  double hi = 2.0;
  if (target_intensity <= intensity(path_color(d, lo))) {
    const Rgb c = path_color(d, lo);
    return {c, chroma_of(c)};
  }
  if (target_intensity >= intensity(path_color(d, hi))) {
    const Rgb c = path_color(d, hi);
    return {c, chroma_of(c)};
  }
  for (int j = 1; j <= n; ++j) {
    const double p = 2.0 * j / n;
    if (intensity(path_color(d, p)) >= target_intensity) {
      lo = 2.0 * (j - 1) / n;
      hi = p;
      break;
    }
  }

  // Intensity grows monotonically along the path, so bisect.
  Rgb best = path_color(d, 0.5 * (lo + hi));
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (lo + hi);
    best = path_color(d, mid);
    const double i_mid = intensity(best);
    if (std::fabs(i_mid - target_intensity) <= cfg.intensity_tolerance ||
        hi - lo <= 1e-16) {
      break;
    }
    if (i_mid < target_intensity) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return {best, chroma_of(best)};
}

VerifyReport verify_solver(int grid_hue, int grid_i, const OracleConfig& cfg,
                           const SolverFn& solver) {
  if (grid_hue < 2 || grid_i < 2) {
    throw std::invalid_argument("verification grid must be at least 2x2");
  }
  validate(cfg);

  VerifyReport report;
  for (int ih = 0; ih < grid_hue; ++ih) {
    const double hue = 360.0 * ih / grid_hue;
    for (int ii = 0; ii < grid_i; ++ii) {
      const double target = static_cast<double>(ii) / (grid_i - 1);
      const Rgb solved =
          solver ? solver(hue, target) : max_chroma_color(hue, target);
      const OracleResult reference =
          brute_force_max_chroma(hue, target, cfg);
      const double chroma_gap =
          std::fabs(chroma_of(solved) - reference.chroma);
      const double rgb_gap =
          std::max({std::fabs(solved.r - reference.color.r),
                    std::fabs(solved.g - reference.color.g),
                    std::fabs(solved.b - reference.color.b)});
      if (chroma_gap > report.max_abs_chroma_gap) {
        report.max_abs_chroma_gap = chroma_gap;
        report.worst_hue_deg = hue;
        report.worst_intensity = target;
      }
      report.max_rgb_gap = std::max(report.max_rgb_gap, rgb_gap);
    }
  }
  return report;
}

std::optional<OracleResult> cube_scan_max_chroma(double hue_deg,
                                                 double target_intensity,
                                                 int points_per_axis,
                                                 double hue_window_deg,
                                                 double intensity_window) {
  if (points_per_axis < 2 || points_per_axis > 64) {
    throw std::invalid_argument("points_per_axis must lie in [2,64]");
  }
  if (!(hue_window_deg > 0.0) || !(intensity_window > 0.0)) {
    throw std::invalid_argument("windows must be positive");
  }
  const double wanted = normalize_degrees(hue_deg);
  const int n = points_per_axis;
  std::optional<OracleResult> best;
  for (int ir = 0; ir < n; ++ir) {
    for (int ig = 0; ig < n; ++ig) {
      for (int ib = 0; ib < n; ++ib) {
        const Rgb c(static_cast<double>(ir) / (n - 1),
                    static_cast<double>(ig) / (n - 1),
                    static_cast<double>(ib) / (n - 1));
        if (std::fabs(intensity(c) - target_intensity) > intensity_window) {
          continue;
        }
        const Hci h = rgb_to_hci(c);
        if (h.hue_deg.has_value() &&
            circular_distance_deg(*h.hue_deg, wanted) > hue_window_deg) {
          continue;  // grays pass the hue filter trivially
        }
        if (!best.has_value() || h.chroma > best->chroma) {
          best = OracleResult{c, h.chroma};
        }
      }
    }
  }
  return best;
}

}  // namespace chromascale
