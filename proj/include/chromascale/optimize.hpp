// Exhaustive search for the scale start hue that maximizes (or minimizes)
// average chroma, and the canonical 16-combination survey.
#pragma once

#include <utility>
#include <vector>

#include "chromascale/scale.hpp"

namespace chromascale {

enum class Objective { Max, Min };

struct SweepSpec {
  double theta_span_deg = 360.0;
  double intensity_min = 0.0;
  double intensity_max = 1.0;
  double grid_step_deg = 0.25;  // must tile the circle evenly
  int samples = 1024;           // quadrature resolution per candidate
  Objective objective = Objective::Max;
};

struct SweepResult {
  SweepSpec spec;
  // (theta_start, avg_chroma) for every grid candidate, in grid order.
  std::vector<std::pair<double, double>> table;
  double best_theta_start_deg = 0.0;
  double best_avg_chroma = 0.0;
  ColorScale best_scale;
};

// Number of grid points a step produces on [0,360); throws unless the step
// divides 360 evenly.
int grid_point_count(double grid_step_deg);

// Evaluate average chroma at every theta_start on the grid and pick the
// extreme under the objective. Exact ties go to the smallest theta_start.
SweepResult sweep(const SweepSpec& spec);

// The canonical survey: intensity_min in {0, 0.1} (outer), intensity_max in
// {0.9, 1} (middle), span in {-360, -300, 300, 360} (inner), 16 sweeps total
// in that fixed order.
std::vector<SweepResult> sweep16(double grid_step_deg = 0.25,
                                 int samples = 1024,
                                 Objective objective = Objective::Max);

}  // namespace chromascale
