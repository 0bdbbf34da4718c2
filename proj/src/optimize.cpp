#include "chromascale/optimize.hpp"

#include <cmath>
#include <stdexcept>

namespace chromascale {

int grid_point_count(double grid_step_deg) {
  if (!std::isfinite(grid_step_deg) || !(grid_step_deg > 0.0)) {
    throw std::invalid_argument("grid step must be positive");
  }
  const double count = 360.0 / grid_step_deg;
  const long long n = std::llround(count);
  if (n < 1 || std::fabs(count - static_cast<double>(n)) > 1e-9) {
    throw std::invalid_argument("grid step must divide 360 evenly");
  }
  if (n > 10'000'000) {
    throw std::invalid_argument("grid step is too small");
  }
  return static_cast<int>(n);
}

SweepResult sweep(const SweepSpec& spec) {
  const int n_grid = grid_point_count(spec.grid_step_deg);
  if (spec.objective != Objective::Max && spec.objective != Objective::Min) {
    throw std::invalid_argument("unknown objective");
  }

  SweepResult result;
  result.spec = spec;
  result.table.reserve(static_cast<size_t>(n_grid));

  const bool maximize = spec.objective == Objective::Max;
  int best_index = -1;
  double best_value = 0.0;
  for (int i = 0; i < n_grid; ++i) {
    const double theta = i * spec.grid_step_deg;
    const double avg = average_chroma(
        ScaleSpec{theta, spec.theta_span_deg, spec.intensity_min,
                  spec.intensity_max, spec.samples});
    result.table.emplace_back(theta, avg);
    // Strict comparison on an ascending grid implements the smallest-theta
    // tie-break.
    if (best_index < 0 || (maximize ? avg > best_value : avg < best_value)) {
      best_index = i;
      best_value = avg;
    }
  }

  result.best_theta_start_deg = result.table[static_cast<size_t>(best_index)].first;
  result.best_avg_chroma = best_value;
  result.best_scale = build_scale(
      ScaleSpec{result.best_theta_start_deg, spec.theta_span_deg,
                spec.intensity_min, spec.intensity_max, spec.samples});
  return result;
}

std::vector<SweepResult> sweep16(double grid_step_deg, int samples,
                                 Objective objective) {
  std::vector<SweepResult> results;
  results.reserve(16);
  for (const double i_min : {0.0, 0.1}) {
    for (const double i_max : {0.9, 1.0}) {
      for (const double span : {-360.0, -300.0, 300.0, 360.0}) {
        results.push_back(sweep(SweepSpec{span, i_min, i_max, grid_step_deg,
                                          samples, objective}));
      }
    }
  }
  return results;
}

}  // namespace chromascale
