#include "sedcore/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "sedcore/csv.hpp"
#include "sedcore/errors.hpp"
#include "sedcore/rng.hpp"

namespace sedcore {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Reversal rate (in 1/s) at which the oscillation relief reaches half
// strength. The direction reversals of the zigzag motion re-break the grain
// structure around the liner; steady rotation does not.
constexpr double kOscillationHalfRate = 0.3;

double oscillation_activity(const PatternSpec& p) {
  if (p.kind != PatternKind::zigzag) return 0.0;
  const double reversal_rate = 0.1 * p.f_r_hz / kPi;
  return reversal_rate / (reversal_rate + kOscillationHalfRate);
}

// Simpson segment length of f over [t0, t1] (integrand is smooth at step
// scale, so the composite error is negligible against the 1e-6 contract).
template <typename F>
double segment_integral(F&& f, double t0, double t1) {
  const double h = t1 - t0;
  return h / 6.0 * (f(t0) + 4.0 * f(0.5 * (t0 + t1)) + f(t1));
}

}  // namespace

std::string_view to_string(TrialTermination t) {
  switch (t) {
    case TrialTermination::reached_depth: return "reached_depth";
    case TrialTermination::stalled: return "stalled";
    case TrialTermination::current_limit: return "current_limit";
  }
  return "unknown";
}

std::optional<TrialTermination> termination_from(std::string_view text) {
  if (text == "reached_depth") return TrialTermination::reached_depth;
  if (text == "stalled") return TrialTermination::stalled;
  if (text == "current_limit") return TrialTermination::current_limit;
  return std::nullopt;
}

void TrialConfig::validate(const CoreGeometry& geom) const {
  geom.validate();
  motors.validate();
  require_finite(target_depth_mm, "target depth");
  require_finite(dt_s, "dt");
  require_finite(feed.command_N, "feed force");
  require_finite(feed.max_N, "feed force limit");
  require_finite(buoyant_weight_N, "buoyant weight");
  require_finite(noise_rel, "noise level");
  require(target_depth_mm > 0.0, "target depth must be > 0");
  require(target_depth_mm <= geom.liner_length_mm,
          "target depth exceeds the usable liner length");
  require(dt_s > 0.0, "dt must be > 0");
  require(feed.command_N >= 0.0 && feed.max_N >= 0.0, "feed forces must be >= 0");
  require(buoyant_weight_N >= 0.0, "buoyant weight must be >= 0");
  require(noise_rel >= 0.0, "noise level must be >= 0");
}

TrialRecord simulate_trial(const PatternSpec& pattern, const SedimentSpec& sediment,
                           const CoreGeometry& geom, const TrialConfig& config) {
  pattern.validate();
  sediment.validate();
  config.validate(geom);

  const double v = pattern.v_mm_s;
  const double omega = pattern.omega_rad_s;
  const double r = geom.kinematic_radius_mm;
  const double target = config.target_depth_mm;
  const double dt = config.dt_s;
  const double step_dz = v * dt;

  // Steady-kinematics quantities. Resistance uses the commanded angular
  // speed; the fast zigzag oscillation enters through the reversal relief
  // below, not through the instantaneous rate (the soil responds on time
  // scales well above the oscillation period).
  const double af = axial_fraction(v, omega, r);
  const double tf = omega > 0.0 ? (omega * r) / std::hypot(v, omega * r) : 0.0;
  const double rotation_factor = 1.0 - sediment.rotation_relief * (1.0 - af);
  const double reversal_factor = 1.0 - sediment.rotation_relief * oscillation_activity(pattern);

  const auto rim_rate_mag = [&](double t) { return std::abs(rim_angle_rate(pattern, t)); };
  const auto rim_speed = [&](double t) { return std::hypot(v, r * rim_rate_mag(t)); };
  const auto rim_tangential = [&](double t) { return r * rim_rate_mag(t); };

  SplitMix64 rng(config.seed);
  const auto noisy = [&](double value) {
    if (config.noise_rel <= 0.0) return value;
    return value * std::max(0.0, 1.0 + config.noise_rel * rng.gaussian());
  };

  TrialRecord trial;
  trial.pattern = pattern;
  trial.sediment = sediment.name;

  long n = 0;
  double t = 0.0;
  double depth = 0.0;
  double travel = 0.0;
  double tangential_travel = 0.0;
  double work = 0.0;
  double prev_force = 0.0;
  double pending_ds = 0.0;
  bool have_pending = false;

  for (;;) {
    const ResistanceForces res = resistance_forces(sediment, geom, depth, v, omega);
    const double side_friction = res.side_friction_N * reversal_factor;
    const double friction_magnitude =
        sediment.friction_coeff_N_mm * depth * rotation_factor * reversal_factor;
    const double torque_demand = friction_magnitude * tf * r;
    const double force_demand = std::max(0.0, res.tip_bearing_N + side_friction -
                                                  config.buoyant_weight_N);

    const ForceBalance fb = penetration_force(config.feed.at(t), config.buoyant_weight_N,
                                              res.tip_bearing_N, side_friction);
    const MotorCurrents currents = motor_currents(force_demand, torque_demand, config.motors);

    if (have_pending) {
      work += 0.5 * (prev_force + fb.net_N) * pending_ds;
      have_pending = false;
    }

    trial.samples.push_back(TrialSample{t, -depth, rim_angle(pattern, t), noisy(fb.net_N),
                                        currents.m1_A, currents.m2_A});

    if (currents.at_limit) {
      trial.terminated_by = TrialTermination::current_limit;
      break;
    }
    if (!fb.can_penetrate) {
      trial.terminated_by = TrialTermination::stalled;
      break;
    }
    if (depth >= target) {
      trial.terminated_by = TrialTermination::reached_depth;
      break;
    }

    double step_dt = dt;
    bool partial = false;
    const double remaining = target - depth;
    if (step_dz >= remaining) {
      partial = true;
      step_dt = remaining / v;
    }

    pending_ds = segment_integral(rim_speed, t, t + step_dt);
    tangential_travel += segment_integral(rim_tangential, t, t + step_dt);
    travel += pending_ds;
    prev_force = fb.net_N;
    have_pending = true;

    if (partial) {
      t += step_dt;
      depth = target;
    } else {
      ++n;
      t = static_cast<double>(n) * dt;
      depth = static_cast<double>(n) * step_dz;
    }
  }

  trial.depth_mm = depth;
  trial.travel_mm = travel;
  trial.duration_s = t;
  trial.work_Nmm = work;

  const double trial_tf = travel > 0.0 ? tangential_travel / travel : 0.0;
  const double eta = std::clamp(
      1.0 - std::exp(-sediment.capture_gain * (1.0 + trial_tf)), 0.0, 1.0);
  const double ri = geom.inner_radius_mm();
  const double bore_volume_cm3 = kPi * ri * ri * depth / 1000.0;
  trial.mass_g = noisy(eta * sediment.bulk_density_g_cm3 * bore_volume_cm3);

  double c1 = 0.0, c2 = 0.0;
  for (const TrialSample& s : trial.samples) {
    c1 = std::max(c1, s.current1_A);
    c2 = std::max(c2, s.current2_A);
  }
  trial.max_current1_A = c1;
  trial.max_current2_A = c2;
  return trial;
}

std::vector<TrialRecord> simulate_replicates(const PatternSpec& pattern,
                                             const SedimentSpec& sediment,
                                             const CoreGeometry& geom, const TrialConfig& config,
                                             int replicates) {
  require(replicates >= 1, "need at least one replicate");
  std::vector<TrialRecord> trials;
  trials.reserve(static_cast<std::size_t>(replicates));
  for (int i = 0; i < replicates; ++i) {
    TrialConfig c = config;
    c.seed = derive_seed(config.seed, static_cast<std::uint64_t>(i));
    TrialRecord trial = simulate_trial(pattern, sediment, geom, c);
    trial.trial_id = i + 1;
    trials.push_back(std::move(trial));
  }
  return trials;
}

void write_timeseries_csv(std::ostream& out, std::span<const TrialSample> samples) {
  out << "t_s,z_mm,theta_rad,force_N,current1_A,current2_A\n";
  char buf[200];
  for (const TrialSample& s : samples) {
    std::snprintf(buf, sizeof(buf), "%.6f,%.6f,%.6f,%.6f,%.6f,%.6f\n", s.t_s, s.z_mm, s.theta_rad,
                  s.force_N, s.current1_A, s.current2_A);
    out << buf;
  }
}

std::vector<TrialSample> read_timeseries_csv(std::istream& in, const std::string& source_name) {
  const CsvContent csv = read_csv(in, source_name);
  const std::vector<std::string> expected = {"t_s",     "z_mm",       "theta_rad",
                                             "force_N", "current1_A", "current2_A"};
  require(csv.header == expected, source_name + ": unexpected time-series header");
  std::vector<TrialSample> samples;
  samples.reserve(csv.rows.size());
  double prev_t = -1.0;
  for (const CsvRow& row : csv.rows) {
    const std::string where = source_name + " line " + std::to_string(row.line_no);
    require(row.fields.size() == expected.size(), where + ": wrong field count");
    double values[6];
    for (std::size_t i = 0; i < 6; ++i) {
      const auto parsed = parse_double(row.fields[i]);
      require(parsed.has_value(), where + ": bad number '" + row.fields[i] + "'");
      values[i] = *parsed;
    }
    require(values[0] >= prev_t, where + ": time samples must be non-decreasing");
    prev_t = values[0];
    samples.push_back(TrialSample{values[0], values[1], values[2], values[3], values[4], values[5]});
  }
  return samples;
}

void write_summary_csv(std::ostream& out, std::span<const TrialRecord> trials) {
  out << "trial_id,sediment,kind,v_mm_s,omega_rad_s,f_r_hz,mass_g,depth_mm,travel_mm,duration_s,"
         "work_Nmm,terminated_by\n";
  for (const TrialRecord& t : trials) {
    out << t.trial_id << ',' << t.sediment << ',' << to_string(t.pattern.kind) << ','
        << fixed(t.pattern.v_mm_s, 3) << ',' << fixed(t.pattern.omega_rad_s, 3) << ','
        << fixed(t.pattern.f_r_hz, 3) << ',' << fixed(t.mass_g, 4) << ',' << fixed(t.depth_mm, 4)
        << ',' << fixed(t.travel_mm, 4) << ',' << fixed(t.duration_s, 6) << ','
        << fixed(t.work_Nmm, 4) << ',' << to_string(t.terminated_by) << '\n';
  }
}

IngestResult ingest_summary(std::istream& in, const std::string& source_name,
                            const IngestOptions& options) {
  const CsvContent csv = read_csv(in, source_name);
  const std::vector<std::string> expected = {
      "trial_id", "sediment", "kind",       "v_mm_s",     "omega_rad_s", "f_r_hz",
      "mass_g",   "depth_mm", "travel_mm",  "duration_s", "work_Nmm",    "terminated_by"};

  IngestResult result;
  if (csv.header != expected) {
    result.errors.push_back(source_name + ": unexpected summary header");
    return result;
  }

  std::set<long> seen_ids;
  for (const CsvRow& row : csv.rows) {
    const std::string where = source_name + " line " + std::to_string(row.line_no);
    if (row.fields.size() != expected.size()) {
      result.errors.push_back(where + ": wrong field count");
      continue;
    }

    const auto id = parse_long(row.fields[0]);
    if (!id) {
      result.errors.push_back(where + ": bad trial id '" + row.fields[0] + "'");
      continue;
    }
    if (!seen_ids.insert(*id).second) {
      result.errors.push_back(where + ": duplicate trial id " + std::to_string(*id));
      continue;
    }

    const std::string& sediment = row.fields[1];
    if (sediment.empty()) {
      result.errors.push_back(where + ": empty sediment label");
      continue;
    }

    const auto kind = pattern_kind_from(row.fields[2]);
    const auto v = parse_double(row.fields[3]);
    const auto omega = parse_double(row.fields[4]);
    const auto f_r = parse_double(row.fields[5]);
    if (!kind || !v || !omega || !f_r) {
      result.errors.push_back(where + ": bad pattern columns");
      continue;
    }

    TrialRecord trial;
    trial.trial_id = static_cast<int>(*id);
    trial.sediment = sediment;
    try {
      trial.pattern = make_pattern(*kind, *v, *omega, *f_r);
      if (options.platform_constrained) trial.pattern.validate(options.limits);
    } catch (const validation_error& e) {
      result.errors.push_back(where + ": " + e.what());
      continue;
    }

    const auto mass = parse_double(row.fields[6]);
    const auto depth = parse_double(row.fields[7]);
    const auto travel = parse_double(row.fields[8]);
    const auto duration = parse_double(row.fields[9]);
    const auto work = row.fields[10].empty() ? std::optional<double>(0.0)
                                             : parse_double(row.fields[10]);
    const auto terminated = termination_from(row.fields[11]);
    if (!mass || !depth || !travel || !duration || !work || !terminated) {
      result.errors.push_back(where + ": bad numeric or termination column");
      continue;
    }
    if (*mass < 0.0) {
      result.errors.push_back(where + ": mass_g must be >= 0");
      continue;
    }
    if (*depth < 0.0 || *travel < *depth - 1e-9) {
      result.errors.push_back(where + ": need travel_mm >= depth_mm >= 0");
      continue;
    }
    if (*duration < 0.0 || *work < 0.0) {
      result.errors.push_back(where + ": duration_s and work_Nmm must be >= 0");
      continue;
    }
    trial.mass_g = *mass;
    trial.depth_mm = *depth;
    trial.travel_mm = *travel;
    trial.duration_s = *duration;
    trial.work_Nmm = *work;
    trial.terminated_by = *terminated;

    namespace fs = std::filesystem;
    fs::path dir = options.timeseries_dir;
    if (dir.empty()) {
      const fs::path src(source_name);
      dir = src.has_parent_path() ? src.parent_path() : fs::path(".");
    }
    const fs::path ts_path = dir / ("ts_" + std::to_string(*id) + ".csv");
    std::ifstream ts(ts_path);
    if (ts.good()) {
      try {
        trial.samples = read_timeseries_csv(ts, ts_path.string());
        double c1 = 0.0, c2 = 0.0;
        for (const TrialSample& s : trial.samples) {
          c1 = std::max(c1, s.current1_A);
          c2 = std::max(c2, s.current2_A);
        }
        trial.max_current1_A = c1;
        trial.max_current2_A = c2;
      } catch (const validation_error& e) {
        result.errors.push_back(e.what());
        continue;
      }
    } else {
      trial.no_timeseries = true;
    }

    result.records.push_back(std::move(trial));
  }
  return result;
}

IngestResult ingest_summary_csv(const std::filesystem::path& summary_path,
                                const IngestOptions& options) {
  std::ifstream in(summary_path);
  if (!in.good()) {
    IngestResult r;
    r.errors.push_back("cannot open " + summary_path.string());
    return r;
  }
  IngestOptions opts = options;
  if (opts.timeseries_dir.empty() && summary_path.has_parent_path())
    opts.timeseries_dir = summary_path.parent_path();
  return ingest_summary(in, summary_path.string(), opts);
}

}  // namespace sedcore
