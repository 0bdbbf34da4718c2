// Command line front end: generate single scales, search for optimal start
// hues, run the 16-combination survey, export curve data, and check the
// solver against the brute-force oracle.
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "chromascale/optimize.hpp"
#include "chromascale/oracle.hpp"
#include "chromascale/palette.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kIoError = 1;
constexpr int kUsageError = 2;
constexpr int kVerifyError = 3;
constexpr double kVerifyThreshold = 1e-6;

chromascale::Objective parse_objective(const std::string& name) {
  return name == "min" ? chromascale::Objective::Min
                       : chromascale::Objective::Max;
}

// Run `emit` against the file at `path`, or stdout when no path is given.
int emit_output(const std::optional<std::string>& path,
                const std::function<void(std::ostream&)>& emit) {
  if (!path.has_value()) {
    emit(std::cout);
    std::cout.flush();
    if (!std::cout) {
      std::cerr << "error: writing to stdout failed\n";
      return kIoError;
    }
    return kOk;
  }
  std::ofstream out(*path, std::ios::binary);
  if (!out.is_open()) {
    std::cerr << "error: cannot open " << *path << " for writing\n";
    return kIoError;
  }
  emit(out);
  out.flush();
  if (!out) {
    std::cerr << "error: writing " << *path << " failed\n";
    return kIoError;
  }
  return kOk;
}

struct GenerateOptions {
  double theta_start = 0.0;
  double theta_span = 0.0;
  double i_min = 0.0;
  double i_max = 0.0;
  int samples = 256;
  std::string format = "csv";
  int swatch_height = 32;
  std::optional<std::string> out;
};

int run_generate(const GenerateOptions& o) {
  const chromascale::ScaleSpec spec{o.theta_start, o.theta_span, o.i_min,
                                    o.i_max, o.samples};
  const chromascale::PaletteDocument doc =
      chromascale::make_document(chromascale::build_scale(spec));
  return emit_output(o.out, [&](std::ostream& out) {
    if (o.format == "csv") {
      chromascale::write_csv(out, doc);
    } else if (o.format == "json") {
      chromascale::write_json(out, doc);
    } else {
      chromascale::write_ppm(out, doc, o.swatch_height);
    }
  });
}

struct OptimizeOptions {
  double theta_span = 0.0;
  double i_min = 0.0;
  double i_max = 0.0;
  std::string objective = "max";
  double grid_step = 0.25;
  int samples = 1024;
  std::optional<std::string> table;
};

int run_optimize(const OptimizeOptions& o) {
  const chromascale::SweepResult result = chromascale::sweep(
      chromascale::SweepSpec{o.theta_span, o.i_min, o.i_max, o.grid_step,
                             o.samples, parse_objective(o.objective)});
  if (o.table.has_value()) {
    const int rc = emit_output(o.table, [&](std::ostream& out) {
      chromascale::write_sweep_table_csv(out, result);
    });
    if (rc != kOk) {
      return rc;
    }
  }
  std::printf("theta_start=%.6f avg_chroma=%.6f\n",
              result.best_theta_start_deg, result.best_avg_chroma);
  return kOk;
}

struct Sweep16Options {
  std::string objective = "max";
  std::string out_dir = ".";
  double grid_step = 0.25;
  int samples = 1024;
};

int run_sweep16(const Sweep16Options& o) {
  const std::vector<chromascale::SweepResult> results =
      chromascale::sweep16(o.grid_step, o.samples, parse_objective(o.objective));
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(o.out_dir, ec);  // open failures below report the rest
  for (const chromascale::SweepResult& r : results) {
    char name[96];
    std::snprintf(name, sizeof name, "scale_imin%g_imax%g_span%g.ppm",
                  r.spec.intensity_min, r.spec.intensity_max,
                  r.spec.theta_span_deg);
    std::ofstream out(fs::path(o.out_dir) / name, std::ios::binary);
    if (!out.is_open()) {
      std::cerr << "error: cannot open " << name << " in " << o.out_dir << '\n';
      return kIoError;
    }
    chromascale::write_ppm(out, chromascale::make_document(r.best_scale), 32);
    out.flush();
    if (!out) {
      std::cerr << "error: writing " << name << " failed\n";
      return kIoError;
    }
  }
  std::ofstream summary(fs::path(o.out_dir) / "summary.csv",
                        std::ios::binary);
  if (!summary.is_open()) {
    std::cerr << "error: cannot open summary.csv in " << o.out_dir << '\n';
    return kIoError;
  }
  chromascale::write_sweep_summary_csv(summary, results);
  summary.flush();
  return summary ? kOk : kIoError;
}

struct HueCurveOptions {
  int samples_per_sector = 60;
  std::vector<double> overlay_spans;
  double grid_step = 0.25;
  int samples = 1024;
  std::optional<std::string> out;
};

int run_huecurve(const HueCurveOptions& o) {
  std::vector<chromascale::ColorScale> overlays;
  overlays.reserve(o.overlay_spans.size());
  for (const double span : o.overlay_spans) {
    // each overlay is the optimal full-intensity scale for that span
    overlays.push_back(
        chromascale::sweep(chromascale::SweepSpec{span, 0.0, 1.0, o.grid_step,
                                                  o.samples,
                                                  chromascale::Objective::Max})
            .best_scale);
  }
  return emit_output(o.out, [&](std::ostream& out) {
    chromascale::write_hue_curve_csv(out, o.samples_per_sector, overlays);
  });
}

struct VerifyOptions {
  int grid_hue = 360;
  int grid_i = 101;
  double perturb = 0.0;
};

int run_verify(const VerifyOptions& o) {
  chromascale::SolverFn solver;
  if (o.perturb > 0.0) {
    const double eps = o.perturb;
    // Pull the dominant component down to fake a suboptimal solver; the
    // verification run must notice.
    solver = [eps](double hue, double target) {
      const chromascale::Rgb c = chromascale::max_chroma_color(hue, target);
      double r = c.r, g = c.g, b = c.b;
      if (r >= g && r >= b) {
        r = std::max(0.0, r - eps);
      } else if (g >= b) {
        g = std::max(0.0, g - eps);
      } else {
        b = std::max(0.0, b - eps);
      }
      return chromascale::Rgb(r, g, b);
    };
  }
  const chromascale::VerifyReport report =
      chromascale::verify_solver(o.grid_hue, o.grid_i, {}, solver);
  std::printf("max_abs_chroma_gap=%.6e\n", report.max_abs_chroma_gap);
  std::printf("max_rgb_gap=%.6e\n", report.max_rgb_gap);
  std::printf("worst_hue_deg=%.6f\n", report.worst_hue_deg);
  std::printf("worst_intensity=%.6f\n", report.worst_intensity);
  if (report.max_abs_chroma_gap < kVerifyThreshold) {
    std::printf("verification: PASS (threshold %.0e)\n", kVerifyThreshold);
    return kOk;
  }
  std::printf("verification: FAIL (threshold %.0e)\n", kVerifyThreshold);
  return kVerifyError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "color scales with linear hue and linear intensity, filled with the "
      "most colorful RGB available at every point"};
  app.require_subcommand(1);

  GenerateOptions gen;
  CLI::App* c_gen =
      app.add_subcommand("generate", "emit one scale as csv, json, or ppm");
  c_gen->add_option("--theta-start", gen.theta_start, "start hue in degrees")
      ->required();
  c_gen->add_option("--theta-span", gen.theta_span,
                    "signed hue span in degrees, |span| <= 360")
      ->required();
  c_gen->add_option("--i-min", gen.i_min, "intensity at s=0")->required();
  c_gen->add_option("--i-max", gen.i_max, "intensity at s=1")->required();
  c_gen->add_option("--samples", gen.samples, "number of stops")
      ->capture_default_str();
  c_gen->add_option("--format", gen.format, "csv, json, or ppm")
      ->check(CLI::IsMember({"csv", "json", "ppm"}))
      ->capture_default_str();
  c_gen->add_option("--swatch-height", gen.swatch_height,
                    "pixel height of each ppm band")
      ->capture_default_str();
  c_gen->add_option("--out", gen.out, "output path (stdout when omitted)");

  OptimizeOptions opt;
  CLI::App* c_opt = app.add_subcommand(
      "optimize", "search start hues for the extreme average chroma");
  c_opt->add_option("--theta-span", opt.theta_span, "signed hue span")
      ->required();
  c_opt->add_option("--i-min", opt.i_min, "intensity at s=0")->required();
  c_opt->add_option("--i-max", opt.i_max, "intensity at s=1")->required();
  c_opt->add_option("--objective", opt.objective, "max or min")
      ->check(CLI::IsMember({"max", "min"}))
      ->required();
  c_opt->add_option("--grid-step", opt.grid_step,
                    "search step in degrees; must divide 360")
      ->capture_default_str();
  c_opt->add_option("--samples", opt.samples, "quadrature samples")
      ->capture_default_str();
  c_opt->add_option("--table", opt.table, "write the full search table CSV");

  Sweep16Options s16;
  CLI::App* c_s16 = app.add_subcommand(
      "sweep16", "optimize all 16 span/intensity combinations");
  c_s16->add_option("--objective", s16.objective, "max or min")
      ->check(CLI::IsMember({"max", "min"}))
      ->required();
  c_s16->add_option("--out-dir", s16.out_dir,
                    "directory for swatches and summary.csv")
      ->capture_default_str();
  c_s16->add_option("--grid-step", s16.grid_step, "search step in degrees")
      ->capture_default_str();
  c_s16->add_option("--samples", s16.samples, "quadrature samples")
      ->capture_default_str();

  HueCurveOptions curve;
  CLI::App* c_curve = app.add_subcommand(
      "huecurve",
      "emit the saturated-color intensity per hue, with optional overlays");
  c_curve->add_option("--samples-per-sector", curve.samples_per_sector,
                      "rows per 60-degree sector")
      ->capture_default_str();
  c_curve->add_option("--overlay-span", curve.overlay_spans,
                      "also trace the optimal scale with this span "
                      "(repeatable)");
  c_curve->add_option("--grid-step", curve.grid_step,
                      "search step for overlays")
      ->capture_default_str();
  c_curve->add_option("--samples", curve.samples,
                      "quadrature samples for overlays")
      ->capture_default_str();
  c_curve->add_option("--out", curve.out, "output path (stdout when omitted)");

  VerifyOptions ver;
  CLI::App* c_ver = app.add_subcommand(
      "verify", "compare the solver against the brute-force oracle");
  c_ver->add_option("--grid-hue", ver.grid_hue, "hue samples in [0,360)")
      ->capture_default_str();
  c_ver->add_option("--grid-i", ver.grid_i, "intensity samples in [0,1]")
      ->capture_default_str();
  c_ver->add_option("--perturb", ver.perturb,
                    "offset the solver output to exercise the failure path")
      ->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);  // prints help text or the parse error
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (c_gen->parsed()) {
      return run_generate(gen);
    }
    if (c_opt->parsed()) {
      return run_optimize(opt);
    }
    if (c_s16->parsed()) {
      return run_sweep16(s16);
    }
    if (c_curve->parsed()) {
      return run_huecurve(curve);
    }
    if (c_ver->parsed()) {
      return run_verify(ver);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIoError;
  }
  return kOk;
}
