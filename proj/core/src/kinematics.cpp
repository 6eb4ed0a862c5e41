#include "sedcore/kinematics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "sedcore/errors.hpp"

namespace sedcore {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Nudge for floor() on exact multiples (e.g. duration = pi with f_r = 10).
constexpr double kGridNudge = 1e-9;

double simpson(double (*f)(const PatternSpec&, const CoreGeometry&, double),
               const PatternSpec& p, const CoreGeometry& g, double a, double m, double b,
               double fa, double fm, double fb, double whole, double eps, int depth) {
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(p, g, lm);
  const double frm = f(p, g, rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * eps) return left + right + delta / 15.0;
  return simpson(f, p, g, a, lm, m, fa, flm, fm, left, eps * 0.5, depth - 1) +
         simpson(f, p, g, m, rm, b, fm, frm, fb, right, eps * 0.5, depth - 1);
}

double rim_speed(const PatternSpec& p, const CoreGeometry& g, double t) {
  return std::hypot(p.v_mm_s, g.kinematic_radius_mm * rim_angle_rate(p, t));
}

}  // namespace

std::string_view to_string(PatternKind kind) {
  switch (kind) {
    case PatternKind::linear: return "linear";
    case PatternKind::helical: return "helical";
    case PatternKind::zigzag: return "zigzag";
  }
  return "unknown";
}

std::optional<PatternKind> pattern_kind_from(std::string_view text) {
  if (text == "linear" || text == "P1") return PatternKind::linear;
  if (text == "helical" || text == "P2") return PatternKind::helical;
  if (text == "zigzag" || text == "zig-zag" || text == "P3") return PatternKind::zigzag;
  return std::nullopt;
}

PatternSpec PatternSpec::linear(double v) { return PatternSpec{PatternKind::linear, v, 0.0, 0.0}; }

PatternSpec PatternSpec::helical(double v, double omega) {
  return PatternSpec{PatternKind::helical, v, omega, 0.0};
}

PatternSpec PatternSpec::zigzag(double v, double omega, double f) {
  return PatternSpec{PatternKind::zigzag, v, omega, f};
}

void PatternSpec::validate() const {
  require_finite(v_mm_s, "feed rate");
  require_finite(omega_rad_s, "angular speed");
  require_finite(f_r_hz, "input frequency");
  require(v_mm_s > 0.0, "feed rate must be > 0 mm/s");
  require(omega_rad_s >= 0.0, "angular speed must be >= 0 rad/s");
  require(f_r_hz >= 0.0, "input frequency must be >= 0 Hz");
  switch (kind) {
    case PatternKind::linear:
      require(omega_rad_s == 0.0 && f_r_hz == 0.0, "linear pattern cannot carry rotation terms");
      break;
    case PatternKind::helical:
      require(omega_rad_s > 0.0, "helical pattern needs omega_r > 0");
      require(f_r_hz == 0.0, "helical pattern has no direction-change frequency");
      break;
    case PatternKind::zigzag:
      require(omega_rad_s > 0.0, "zigzag pattern needs omega_r > 0");
      require(f_r_hz > 0.0, "zigzag pattern needs f_r > 0 (or opt into the helical fallback)");
      break;
  }
}

void PatternSpec::validate(const PlatformLimits& limits) const {
  validate();
  require(v_mm_s <= limits.max_feed_mm_s, "feed rate exceeds the platform limit");
  require(omega_rad_s <= limits.max_spin_rad_s, "angular speed exceeds the platform limit");
  require(f_r_hz <= limits.max_flip_hz, "input frequency exceeds the platform limit");
}

std::string PatternSpec::label() const {
  const char* p = kind == PatternKind::linear ? "P1" : kind == PatternKind::helical ? "P2" : "P3";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%s:%g/%g/%g", p, v_mm_s, omega_rad_s, f_r_hz);
  return buf;
}

PatternSpec make_pattern(PatternKind kind, double v, double omega, double f,
                         ZigzagZeroFrequency policy) {
  if (kind == PatternKind::zigzag && f == 0.0) {
    if (policy == ZigzagZeroFrequency::error)
      throw validation_error("zigzag with f_r = 0 is degenerate (angle law divides by f_r)");
    kind = PatternKind::helical;
  }
  PatternSpec spec{kind, v, omega, f};
  spec.validate();
  return spec;
}

double CoreGeometry::tip_annulus_area_mm2() const {
  const double ro = outer_radius_mm();
  const double ri = inner_radius_mm();
  return kPi * (ro * ro - ri * ri);
}

void CoreGeometry::validate() const {
  for (double v : {outer_diameter_mm, inner_diameter_mm, wall_thickness_mm, liner_length_mm,
                   kinematic_radius_mm})
    require_finite(v, "geometry field");
  require(inner_diameter_mm > 0.0 && wall_thickness_mm > 0.0 && liner_length_mm > 0.0,
          "geometry dimensions must be positive");
  require(std::abs(outer_diameter_mm - (inner_diameter_mm + 2.0 * wall_thickness_mm)) < 1e-9,
          "outer diameter must equal inner diameter + 2 * wall thickness");
  require(kinematic_radius_mm > 0.0 && kinematic_radius_mm <= outer_radius_mm() + 1e-12,
          "kinematic radius must lie in (0, outer radius]");
}

double rim_angle(const PatternSpec& p, double t) {
  switch (p.kind) {
    case PatternKind::linear: return 0.0;
    case PatternKind::helical: return p.omega_rad_s * t;
    case PatternKind::zigzag:
      return 10.0 * p.omega_rad_s * std::abs(std::sin(0.1 * p.f_r_hz * t)) / p.f_r_hz;
  }
  return 0.0;
}

double rim_angle_rate(const PatternSpec& p, double t) {
  switch (p.kind) {
    case PatternKind::linear: return 0.0;
    case PatternKind::helical: return p.omega_rad_s;
    case PatternKind::zigzag: {
      const double u = 0.1 * p.f_r_hz * t;
      const double s = std::sin(u);
      const double c = std::cos(u);
      // At the reversal kinks (sin u = 0) the angle law |sin| bounces upward;
      // return the right-sided rate so quadrature nodes landing exactly on a
      // kink see the physical swing speed omega * |cos u|.
      if (s == 0.0) return p.omega_rad_s * std::abs(c);
      return p.omega_rad_s * (s > 0.0 ? 1.0 : -1.0) * c;
    }
  }
  return 0.0;
}

double zigzag_peak_angle(const PatternSpec& p) {
  if (p.kind != PatternKind::zigzag) return 0.0;
  return 10.0 * p.omega_rad_s / p.f_r_hz;
}

TrajectoryPoint position_at(const PatternSpec& p, const CoreGeometry& g, double t) {
  p.validate();
  g.validate();
  require_finite(t, "time");
  require(t >= 0.0, "time must be >= 0");
  const double theta = rim_angle(p, t);
  const double r = g.kinematic_radius_mm;
  const double z = t == 0.0 ? 0.0 : -p.v_mm_s * t;
  return TrajectoryPoint{t, r * std::sin(theta), r * std::cos(theta), z, theta};
}

std::vector<TrajectoryPoint> trajectory(const PatternSpec& p, const CoreGeometry& g,
                                        double duration, double dt) {
  p.validate();
  g.validate();
  require_finite(duration, "duration");
  require_finite(dt, "dt");
  require(duration > 0.0, "duration must be > 0");
  require(dt > 0.0 && dt <= duration, "dt must lie in (0, duration]");

  const auto steps = static_cast<long>(std::floor(duration / dt + kGridNudge));
  std::vector<TrajectoryPoint> points;
  points.reserve(static_cast<std::size_t>(steps) + 2);
  for (long k = 0; k <= steps; ++k) points.push_back(position_at(p, g, static_cast<double>(k) * dt));
  if (static_cast<double>(steps) * dt < duration - 1e-12 * std::max(1.0, duration))
    points.push_back(position_at(p, g, duration));
  return points;
}

double path_length(const PatternSpec& p, const CoreGeometry& g, double t_begin, double t_end) {
  p.validate();
  g.validate();
  require_finite(t_begin, "t_begin");
  require_finite(t_end, "t_end");
  require(t_begin >= 0.0 && t_end >= t_begin, "need 0 <= t_begin <= t_end");
  const double span = t_end - t_begin;
  if (span == 0.0) return 0.0;

  switch (p.kind) {
    case PatternKind::linear: return p.v_mm_s * span;
    case PatternKind::helical:
      return span * std::hypot(p.v_mm_s, g.kinematic_radius_mm * p.omega_rad_s);
    case PatternKind::zigzag: {
      // Integrand sqrt(v^2 + (r theta')^2) is smooth: theta'^2 = (w cos u)^2.
      const double m = 0.5 * (t_begin + t_end);
      const double fa = rim_speed(p, g, t_begin);
      const double fm = rim_speed(p, g, m);
      const double fb = rim_speed(p, g, t_end);
      const double whole = span / 6.0 * (fa + 4.0 * fm + fb);
      const double scale = std::max(1e-30, std::abs(whole));
      return simpson(&rim_speed, p, g, t_begin, m, t_end, fa, fm, fb, whole, 1e-9 * scale, 48);
    }
  }
  return 0.0;
}

double path_length(const PatternSpec& p, const CoreGeometry& g, double duration) {
  return path_length(p, g, 0.0, duration);
}

long direction_changes(const PatternSpec& p, double duration) {
  p.validate();
  require_finite(duration, "duration");
  require(duration > 0.0, "duration must be > 0");
  if (p.kind != PatternKind::zigzag) return 0;
  return static_cast<long>(std::floor(duration * 0.1 * p.f_r_hz / kPi + kGridNudge));
}

void write_trajectory_csv(std::ostream& out, std::span<const TrajectoryPoint> points) {
  out << "t_s,x_mm,y_mm,z_mm,theta_rad\n";
  char buf[160];
  for (const auto& pt : points) {
    std::snprintf(buf, sizeof(buf), "%.6f,%.6f,%.6f,%.6f,%.6f\n", pt.t_s, pt.x_mm, pt.y_mm,
                  pt.z_mm, pt.theta_rad);
    out << buf;
  }
}

}  // namespace sedcore
