#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sedcore {

/// The three coring motions the platform can command. P1 feeds straight down,
/// P2 adds continuous rotation, P3 oscillates the rotation direction at the
/// motor input frequency.
enum class PatternKind { linear, helical, zigzag };

std::string_view to_string(PatternKind kind);
std::optional<PatternKind> pattern_kind_from(std::string_view text);

/// Bench limits of the sampling platform (no-load maxima).
struct PlatformLimits {
  double max_feed_mm_s = 38.0;
  double max_spin_rad_s = 12.0;
  double max_flip_hz = 50.0;
};

/// Decision vector of one coring pattern: feed rate v, angular speed omega_r,
/// and direction-change input frequency f_r. Field order matters: ordering
/// comparisons (and the optimizer tie-break) are lexicographic over
/// (kind, v, omega_r, f_r).
struct PatternSpec {
  PatternKind kind = PatternKind::linear;
  double v_mm_s = 0.0;
  double omega_rad_s = 0.0;
  double f_r_hz = 0.0;

  static PatternSpec linear(double v_mm_s);
  static PatternSpec helical(double v_mm_s, double omega_rad_s);
  static PatternSpec zigzag(double v_mm_s, double omega_rad_s, double f_r_hz);

  /// Kind-consistency invariants: linear has no rotation terms, helical has
  /// omega_r > 0 and f_r = 0, zigzag has both omega_r > 0 and f_r > 0.
  void validate() const;
  /// validate() plus the bench limits.
  void validate(const PlatformLimits& limits) const;

  /// Short label in the v/omega/f notation, e.g. "P3:38/12/30".
  std::string label() const;

  friend auto operator<=>(const PatternSpec&, const PatternSpec&) = default;
};

/// What to do with a zigzag request whose f_r is 0 (the angle law divides by
/// f_r). The published step-2 tables list the f_r = 0 column as the helical
/// pattern, so an explicit opt-in maps it there.
enum class ZigzagZeroFrequency { error, treat_as_helical };

PatternSpec make_pattern(PatternKind kind, double v_mm_s, double omega_rad_s, double f_r_hz,
                         ZigzagZeroFrequency policy = ZigzagZeroFrequency::error);

/// Sampling core geometry. The kinematic radius is the radius of the rim
/// point tracked by the trajectory equations; it defaults to the outer
/// radius, which is the surface riding the sediment interface. Sample volume
/// computations use the inner (liner bore) radius instead.
struct CoreGeometry {
  double outer_diameter_mm = 50.8;
  double inner_diameter_mm = 47.8;
  double wall_thickness_mm = 1.5;
  double liner_length_mm = 304.8;
  double kinematic_radius_mm = 25.4;

  double outer_radius_mm() const { return outer_diameter_mm / 2.0; }
  double inner_radius_mm() const { return inner_diameter_mm / 2.0; }
  /// Cross-section of the cutting edge (annulus between outer and inner wall).
  double tip_annulus_area_mm2() const;

  void validate() const;

  /// The stock 50.8 mm PVC liner the bench platform uses.
  static CoreGeometry stock_liner() { return CoreGeometry{}; }
};

struct TrajectoryPoint {
  double t_s = 0.0;
  double x_mm = 0.0;
  double y_mm = 0.0;
  double z_mm = 0.0;
  double theta_rad = 0.0;
};

/// Accumulated rim angle theta(t). Linear: 0. Helical: omega_r * t.
/// Zigzag: 10 * omega_r * |sin(0.1 * f_r * t)| / f_r.
double rim_angle(const PatternSpec& pattern, double t_s);

/// Signed angular rate d(theta)/dt. Zero at the zigzag reversal instants.
double rim_angle_rate(const PatternSpec& pattern, double t_s);

/// Upper bound of the zigzag rim angle, 10 * omega_r / f_r. Zero for the
/// other patterns.
double zigzag_peak_angle(const PatternSpec& pattern);

/// Rim point position at time t: x = r sin(theta), y = r cos(theta),
/// z = -v t (downward negative).
TrajectoryPoint position_at(const PatternSpec& pattern, const CoreGeometry& geom, double t_s);

/// Samples the rim path at t = 0, dt, 2 dt, ...; the final point at
/// `duration` is always included even when it is off the dt grid.
std::vector<TrajectoryPoint> trajectory(const PatternSpec& pattern, const CoreGeometry& geom,
                                        double duration_s, double dt_s);

/// Arc length of the rim point path over [t_begin, t_end]. Closed form for
/// linear and helical motion; adaptive quadrature (relative error < 1e-6,
/// driven to ~1e-9) for zigzag.
double path_length(const PatternSpec& pattern, const CoreGeometry& geom, double t_begin_s,
                   double t_end_s);
double path_length(const PatternSpec& pattern, const CoreGeometry& geom, double duration_s);

/// Number of rotation-direction reversals in (0, duration]. Counts the
/// completed half-cycles of the zigzag oscillation law,
/// floor(duration * 0.1 * f_r / pi); zero for linear and helical motion.
long direction_changes(const PatternSpec& pattern, double duration_s);

/// Writes `t_s,x_mm,y_mm,z_mm,theta_rad` rows, fixed %.6f formatting.
void write_trajectory_csv(std::ostream& out, std::span<const TrajectoryPoint> points);

}  // namespace sedcore
