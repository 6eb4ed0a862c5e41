#include <doctest.h>

#include <cmath>

#include "sedcore/errors.hpp"
#include "sedcore/kinematics.hpp"
#include "sedcore/simulator.hpp"

using namespace sedcore;

namespace {

SedimentSpec frictionless() {
  SedimentSpec s;
  s.name = "frictionless";
  s.d50_um = 100.0;
  s.usda_class = "sand";
  s.bulk_density_g_cm3 = 1.5;
  s.capture_gain = 1.0;
  s.calibration = "synthetic";
  return s;
}

}  // namespace

TEST_CASE("no driving force stalls at the surface") {
  TrialConfig config;
  config.feed.command_N = 0.0;
  config.buoyant_weight_N = 0.0;
  const auto trial =
      simulate_trial(PatternSpec::linear(38), coarse_sand_preset(), CoreGeometry{}, config);
  CHECK(trial.depth_mm == 0.0);
  CHECK(trial.mass_g == 0.0);
  CHECK(trial.terminated_by == TrialTermination::stalled);
  CHECK(trial.samples.size() == 1);
}

TEST_CASE("frictionless sediment reaches the target depth in exactly L_d / v") {
  TrialConfig config;
  const PatternSpec pattern = PatternSpec::linear(38);
  const auto trial = simulate_trial(pattern, frictionless(), CoreGeometry{}, config);
  CHECK(trial.terminated_by == TrialTermination::reached_depth);
  CHECK(trial.depth_mm == doctest::Approx(config.target_depth_mm));
  const double expected = config.target_depth_mm / pattern.v_mm_s;
  CHECK(std::abs(trial.duration_s - expected) <= 1e-9 * expected);
  CHECK(trial.travel_mm == doctest::Approx(config.target_depth_mm).epsilon(1e-9));
}

TEST_CASE("coarse sand preset orders the three patterns by sampled mass") {
  TrialConfig config;
  const SedimentSpec sand = coarse_sand_preset();
  const CoreGeometry geom;
  const double m1 = simulate_trial(PatternSpec::linear(38), sand, geom, config).mass_g;
  const double m2 = simulate_trial(PatternSpec::helical(38, 12), sand, geom, config).mass_g;
  const double m3 = simulate_trial(PatternSpec::zigzag(38, 12, 30), sand, geom, config).mass_g;
  CHECK(m3 > m2);
  CHECK(m2 > m1);
}

TEST_CASE("identical seeds reproduce a noisy trial bit for bit") {
  TrialConfig config;
  config.noise_rel = 0.03;
  config.seed = 1234;
  const PatternSpec pattern = PatternSpec::helical(29, 9);
  const auto a = simulate_trial(pattern, medium_sand_preset(), CoreGeometry{}, config);
  const auto b = simulate_trial(pattern, medium_sand_preset(), CoreGeometry{}, config);
  CHECK(a.mass_g == b.mass_g);
  CHECK(a.work_Nmm == b.work_Nmm);
  REQUIRE(a.samples.size() == b.samples.size());
  for (std::size_t i = 0; i < a.samples.size(); ++i)
    CHECK(a.samples[i].force_N == b.samples[i].force_N);

  config.seed = 99;
  const auto c = simulate_trial(pattern, medium_sand_preset(), CoreGeometry{}, config);
  CHECK(c.mass_g != a.mass_g);
}

TEST_CASE("depth is monotone and bounded by the target") {
  TrialConfig config;
  const auto trial = simulate_trial(PatternSpec::zigzag(38, 12, 30), coarse_sand_preset(),
                                    CoreGeometry{}, config);
  double prev_z = 0.0;
  for (const TrialSample& s : trial.samples) {
    CHECK(s.z_mm <= prev_z + 1e-12);
    CHECK(s.z_mm >= -config.target_depth_mm - 1e-12);
    prev_z = s.z_mm;
  }
  CHECK(trial.travel_mm >= trial.depth_mm - 1e-9);
}

TEST_CASE("work equals the trapezoidal force integral over the rim path") {
  TrialConfig config;
  const CoreGeometry geom;
  for (const PatternSpec& pattern :
       {PatternSpec::linear(38), PatternSpec::helical(38, 12), PatternSpec::zigzag(38, 12, 30)}) {
    const auto trial = simulate_trial(pattern, coarse_sand_preset(), geom, config);
    double oracle = 0.0;
    for (std::size_t i = 1; i < trial.samples.size(); ++i) {
      const double ds =
          path_length(pattern, geom, trial.samples[i - 1].t_s, trial.samples[i].t_s);
      oracle += 0.5 * (trial.samples[i - 1].force_N + trial.samples[i].force_N) * ds;
    }
    CHECK(trial.work_Nmm == doctest::Approx(oracle).epsilon(1e-6));
    CHECK(trial.work_Nmm >= 0.0);
  }
}

TEST_CASE("energy sanity for frictionless sediment") {
  TrialConfig config;
  config.buoyant_weight_N = 0.0;
  const CoreGeometry geom;

  // Linear: the rim path equals the depth, so work = F_e * L_d.
  const auto linear = simulate_trial(PatternSpec::linear(38), frictionless(), geom, config);
  CHECK(linear.work_Nmm ==
        doctest::Approx(config.feed.at(0.0) * config.target_depth_mm).epsilon(1e-9));

  // Helical: work = F_e times the rim path length.
  const auto helical = simulate_trial(PatternSpec::helical(29, 12), frictionless(), geom, config);
  CHECK(helical.work_Nmm ==
        doctest::Approx(config.feed.at(0.0) * helical.travel_mm).epsilon(1e-9));
}

TEST_CASE("current limit terminates the trial at the final sample") {
  TrialConfig config;
  config.motors.current_limit_A = 1.0;  // low budget so the helical run trips it
  const auto trial =
      simulate_trial(PatternSpec::helical(38, 12), coarse_sand_preset(), CoreGeometry{}, config);
  REQUIRE(trial.terminated_by == TrialTermination::current_limit);
  for (const TrialSample& s : trial.samples) {
    CHECK(s.current1_A <= config.motors.current_limit_A + 1e-12);
    CHECK(s.current2_A <= config.motors.current_limit_A + 1e-12);
  }
  const TrialSample& last = trial.samples.back();
  CHECK((last.current1_A == doctest::Approx(config.motors.current_limit_A) ||
         last.current2_A == doctest::Approx(config.motors.current_limit_A)));
}

TEST_CASE("replicates are identical without noise and distinct with it") {
  TrialConfig config;
  const auto quiet = simulate_replicates(PatternSpec::helical(29, 12), medium_sand_preset(),
                                         CoreGeometry{}, config, 3);
  REQUIRE(quiet.size() == 3);
  CHECK(quiet[0].mass_g == quiet[1].mass_g);
  CHECK(quiet[1].mass_g == quiet[2].mass_g);

  config.noise_rel = 0.05;
  const auto noisy = simulate_replicates(PatternSpec::helical(29, 12), medium_sand_preset(),
                                         CoreGeometry{}, config, 3);
  CHECK(noisy[0].mass_g != noisy[1].mass_g);
}

TEST_CASE("config validation") {
  TrialConfig config;
  config.target_depth_mm = 400.0;  // longer than the liner
  CHECK_THROWS_AS(simulate_trial(PatternSpec::linear(38), coarse_sand_preset(), CoreGeometry{},
                                 config),
                  validation_error);
  config.target_depth_mm = 200.0;
  config.dt_s = 0.0;
  CHECK_THROWS_AS(simulate_trial(PatternSpec::linear(38), coarse_sand_preset(), CoreGeometry{},
                                 config),
                  validation_error);
}
