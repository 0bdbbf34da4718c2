// Brute-force verifiers for the closed-form solver. Deliberately slow and
// independent: they locate max-chroma colors by scanning and bisection, never
// through the solver's branch test.
#pragma once

#include <functional>
#include <optional>

#include "chromascale/color.hpp"

namespace chromascale {

struct OracleConfig {
  int grid_resolution = 101;        // coarse scan points per path segment
  double hue_tolerance_deg = 1e-9;  // acceptable hue mismatch in results
  double intensity_tolerance = 1e-12;  // bisection stopping gap
};

// Throws std::invalid_argument unless grid_resolution >= 11 and both
// tolerances are positive.
void validate(const OracleConfig& cfg);

struct OracleResult {
  Rgb color;
  double chroma = 0.0;
};

// Finds the max-chroma color at (hue, intensity) by walking the cube
// boundary for that hue: first segment raises the max component from black
// (min pinned at 0), second segment raises the floor to white (max pinned
// at 1). Intensity is strictly increasing along the walk, so a coarse scan
// brackets the target and bisection pins it down.
OracleResult brute_force_max_chroma(double hue_deg, double target_intensity,
                                    const OracleConfig& cfg = {});

struct VerifyReport {
  double max_abs_chroma_gap = 0.0;
  double max_rgb_gap = 0.0;
  double worst_hue_deg = 0.0;    // where the chroma gap peaked
  double worst_intensity = 0.0;
};

using SolverFn = std::function<Rgb(double, double)>;

// Compares a solver against the oracle on a grid_hue x grid_i lattice over
// [0,360) x [0,1] and reports the worst gaps. An empty solver means the
// library's max_chroma_color; tests inject faulty solvers to prove the
// comparison actually bites.
VerifyReport verify_solver(int grid_hue, int grid_i,
                           const OracleConfig& cfg = {},
                           const SolverFn& solver = {});

// Second opinion at low resolution: scan the whole RGB lattice, keep points
// whose hue and intensity land within the windows, and return the most
// colorful one. Completely bypasses the boundary-walk reasoning; meant for
// spot checks only. Empty when no lattice point fits the windows.
std::optional<OracleResult> cube_scan_max_chroma(double hue_deg,
                                                 double target_intensity,
                                                 int points_per_axis,
                                                 double hue_window_deg,
                                                 double intensity_window);

}  // namespace chromascale
