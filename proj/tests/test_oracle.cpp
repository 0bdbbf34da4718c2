#include <cmath>
#include <random>
#include <stdexcept>

#include "chromascale/oracle.hpp"
#include "doctest.h"

using namespace chromascale;

TEST_CASE("oracle config validation") {
  CHECK_NOTHROW(validate(OracleConfig{}));
  CHECK_THROWS_AS(validate(OracleConfig{10, 1e-9, 1e-12}),
                  std::invalid_argument);
  CHECK_THROWS_AS(validate(OracleConfig{101, 0.0, 1e-12}),
                  std::invalid_argument);
  CHECK_THROWS_AS(validate(OracleConfig{101, 1e-9, -1.0}),
                  std::invalid_argument);
}

TEST_CASE("brute force agrees with the closed form at a worked point") {
  const OracleResult got = brute_force_max_chroma(30.0, 0.3);
  const Rgb want = max_chroma_color(30.0, 0.3);
  CHECK(std::fabs(got.color.r - want.r) < 1e-9);
  CHECK(std::fabs(got.color.g - want.g) < 1e-9);
  CHECK(std::fabs(got.color.b - want.b) < 1e-9);
  CHECK(std::fabs(got.chroma - chroma_of(want)) < 1e-9);
}

TEST_CASE("brute force lands on pure red at its own intensity") {
  const OracleResult got = brute_force_max_chroma(0.0, 0.299);
  CHECK(std::fabs(got.color.r - 1.0) < 1e-9);
  CHECK(std::fabs(got.color.g) < 1e-9);
  CHECK(std::fabs(got.color.b) < 1e-9);
  CHECK(std::fabs(got.chroma - 1.0) < 1e-9);
}

TEST_CASE("brute force pins the gray endpoints exactly") {
  for (const double hue : {0.0, 123.0, 359.5}) {
    const OracleResult black = brute_force_max_chroma(hue, 0.0);
    CHECK(black.color.r == 0.0);
    CHECK(black.color.g == 0.0);
    CHECK(black.color.b == 0.0);
    CHECK(black.chroma == 0.0);
    const OracleResult white = brute_force_max_chroma(hue, 1.0);
    CHECK(white.color.r == 1.0);
    CHECK(white.chroma == 0.0);
  }
}

TEST_CASE("brute force hits the requested hue and intensity") {
  for (int ih = 0; ih < 24; ++ih) {
    for (int ii = 1; ii < 10; ++ii) {
      const double hue = 15.0 * ih;
      const double target = ii / 10.0;
      const OracleResult got = brute_force_max_chroma(hue, target);
      CHECK(std::fabs(intensity(got.color) - target) < 1e-9);
      if (got.chroma > 1e-9) {
        const Hci hci = rgb_to_hci(got.color);
        REQUIRE(hci.hue_deg.has_value());
        CHECK(circular_distance_deg(*hci.hue_deg, hue) < 1e-6);
      }
    }
  }
}

TEST_CASE("verify_solver sees zero gap on the degenerate corner grid") {
  const VerifyReport report = verify_solver(2, 2);
  CHECK(report.max_abs_chroma_gap == 0.0);
  CHECK(report.max_rgb_gap == 0.0);
}

TEST_CASE("verify_solver tracks its tolerances on a coarse grid") {
  const VerifyReport report =
      verify_solver(12, 11, OracleConfig{11, 1e-6, 1e-3});
  CHECK(report.max_abs_chroma_gap <= 1e-2);
  CHECK(report.max_rgb_gap <= 1e-2);
}

TEST_CASE("verify_solver clears the acceptance threshold on a dense grid") {
  const VerifyReport report = verify_solver(72, 21);
  CHECK(report.max_abs_chroma_gap < 1e-6);
  CHECK(report.max_rgb_gap < 1e-6);
}

TEST_CASE("verify_solver flags a deliberately broken solver") {
  const SolverFn crooked = [](double hue, double target) {
    Rgb c = max_chroma_color(hue, target);
    // knock the dominant component down a visible amount
    double* dominant = &c.r;
    if (c.g > *dominant) dominant = &c.g;
    if (c.b > *dominant) dominant = &c.b;
    *dominant = std::max(0.0, *dominant - 0.01);
    return c;
  };
  const VerifyReport report = verify_solver(24, 9, OracleConfig{}, crooked);
  CHECK(report.max_rgb_gap >= 0.009);
}

TEST_CASE("verify_solver rejects degenerate grids") {
  CHECK_THROWS_AS(verify_solver(1, 11), std::invalid_argument);
  CHECK_THROWS_AS(verify_solver(12, 1), std::invalid_argument);
}

TEST_CASE("the oracle never beats the closed form by more than noise") {
  std::mt19937_64 rng(0x5eed0004);
  std::uniform_real_distribution<double> hue_dist(0.0, 360.0);
  std::uniform_real_distribution<double> i_dist(0.0, 1.0);
  for (int n = 0; n < 500; ++n) {
    const double hue = hue_dist(rng);
    const double target = i_dist(rng);
    const OracleResult got = brute_force_max_chroma(hue, target);
    const double closed = chroma_of(max_chroma_color(hue, target));
    CHECK(got.chroma <= closed + 1e-9);
  }
}

TEST_CASE("lattice scan backs up the solver at spot checks") {
  struct Spot {
    double hue, target;
  };
  for (const Spot spot : {Spot{30.0, 0.3}, Spot{210.0, 0.5}, Spot{100.0, 0.7}}) {
    const double reference = chroma_of(max_chroma_color(spot.hue, spot.target));
    const auto got =
        cube_scan_max_chroma(spot.hue, spot.target, 64, 0.5, 0.004);
    REQUIRE(got.has_value());
    // the 64-point lattice quantizes each component to 1/63, so allow a few
    // lattice steps of slack around the exact optimum
    CHECK(got->chroma >= reference - 0.06);
    CHECK(got->chroma <= reference + 0.05);
  }
}

TEST_CASE("lattice scan rejects bad parameters and empty windows") {
  CHECK_THROWS_AS(cube_scan_max_chroma(0.0, 0.5, 1, 1.0, 0.01),
                  std::invalid_argument);
  CHECK_THROWS_AS(cube_scan_max_chroma(0.0, 0.5, 65, 1.0, 0.01),
                  std::invalid_argument);
  CHECK_THROWS_AS(cube_scan_max_chroma(0.0, 0.5, 16, -1.0, 0.01),
                  std::invalid_argument);
  CHECK_THROWS_AS(cube_scan_max_chroma(0.0, 0.5, 16, 1.0, -0.01),
                  std::invalid_argument);
  // a vanishing intensity window around an off-lattice target finds nothing
  CHECK_FALSE(
      cube_scan_max_chroma(30.0, 0.123456789, 8, 0.25, 1e-9).has_value());
}
