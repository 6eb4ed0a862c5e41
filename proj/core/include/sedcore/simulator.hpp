#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sedcore/kinematics.hpp"
#include "sedcore/penetration.hpp"

namespace sedcore {

/// Constant-force feed actuator saturating at the bench maximum
/// (15 kg-force, about 147.1 N).
struct FeedForceProfile {
  double command_N = 147.1;
  double max_N = 147.1;

  double at(double /*t_s*/) const { return command_N < max_N ? command_N : max_N; }
};

struct TrialConfig {
  double target_depth_mm = 200.0;
  double dt_s = 1e-3;
  FeedForceProfile feed;
  double buoyant_weight_N = 10.0;
  MotorParams motors;
  std::uint64_t seed = 0;
  /// Relative measurement noise applied to recorded force samples and the
  /// final mass; 0 gives exact replicates.
  double noise_rel = 0.0;

  void validate(const CoreGeometry& geom) const;
};

enum class TrialTermination { reached_depth, stalled, current_limit };

std::string_view to_string(TrialTermination t);
std::optional<TrialTermination> termination_from(std::string_view text);

struct TrialSample {
  double t_s = 0.0;
  double z_mm = 0.0;
  double theta_rad = 0.0;
  double force_N = 0.0;
  double current1_A = 0.0;
  double current2_A = 0.0;
};

struct TrialRecord {
  int trial_id = 0;
  PatternSpec pattern;
  std::string sediment;
  std::vector<TrialSample> samples;
  double mass_g = 0.0;
  double depth_mm = 0.0;
  double travel_mm = 0.0;
  double duration_s = 0.0;
  double work_Nmm = 0.0;
  TrialTermination terminated_by = TrialTermination::stalled;
  std::optional<double> max_current1_A;
  std::optional<double> max_current2_A;
  bool no_timeseries = false;
};

/// Steps the force balance forward at the pattern's feed rate. Depth advances
/// by v*dt only while the net force is positive and both motor currents stay
/// under the limit; the final step is shortened so the target depth is hit
/// exactly. Work accumulates as the trapezoidal integral of the net force
/// over the rim path. Deterministic for a given seed.
TrialRecord simulate_trial(const PatternSpec& pattern, const SedimentSpec& sediment,
                           const CoreGeometry& geom, const TrialConfig& config);

/// n replicate trials; each owns an RNG stream derived from (seed, replicate).
std::vector<TrialRecord> simulate_replicates(const PatternSpec& pattern,
                                             const SedimentSpec& sediment,
                                             const CoreGeometry& geom, const TrialConfig& config,
                                             int replicates);

/// `t_s,z_mm,theta_rad,force_N,current1_A,current2_A` rows.
void write_timeseries_csv(std::ostream& out, std::span<const TrialSample> samples);
std::vector<TrialSample> read_timeseries_csv(std::istream& in, const std::string& source_name);

/// `trial_id,sediment,kind,v_mm_s,omega_rad_s,f_r_hz,mass_g,depth_mm,travel_mm,duration_s,work_Nmm,terminated_by`
void write_summary_csv(std::ostream& out, std::span<const TrialRecord> trials);

struct IngestOptions {
  /// Directory searched for ts_<trial_id>.csv time-series files; empty means
  /// the summary file's own directory.
  std::filesystem::path timeseries_dir;
  bool platform_constrained = true;
  PlatformLimits limits;
};

struct IngestResult {
  std::vector<TrialRecord> records;
  /// One entry per rejected row, each carrying the 1-based line number.
  std::vector<std::string> errors;

  bool ok() const { return errors.empty(); }
};

IngestResult ingest_summary_csv(const std::filesystem::path& summary_path,
                                const IngestOptions& options = {});
IngestResult ingest_summary(std::istream& in, const std::string& source_name,
                            const IngestOptions& options = {});

}  // namespace sedcore
