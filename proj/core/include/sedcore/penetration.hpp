#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "sedcore/kinematics.hpp"

namespace sedcore {

/// Force balance on the corer: net penetration force
/// F_p = F_e + W_b - Q_t - F_t. Penetration proceeds only while F_p > 0
/// (strictly; F_p = 0 does not advance).
struct ForceBalance {
  double external_N = 0.0;
  double buoyant_weight_N = 0.0;
  double tip_bearing_N = 0.0;
  double side_friction_N = 0.0;
  double net_N = 0.0;
  bool can_penetrate = false;
};

ForceBalance penetration_force(double external_N, double buoyant_weight_N, double tip_bearing_N,
                               double side_friction_N);

/// A named sediment with its median grain size and the coefficients of the
/// resistance/capture model. The shipped presets are calibrated only to
/// reproduce the qualitative pattern ordering of the bench experiments, never
/// measured soil properties; they carry calibration = "qualitative" so nobody
/// mistakes them for lab values.
struct SedimentSpec {
  std::string name;
  double d50_um = 0.0;
  std::string usda_class;
  /// Tip bearing at zero embedment, N (scaled by the tip annulus area factor).
  double bearing_intercept_N = 0.0;
  /// Tip bearing growth per mm of embedment, N/mm.
  double bearing_gradient_N_mm = 0.0;
  /// Side friction per mm of embedded depth, N/mm.
  double friction_coeff_N_mm = 0.0;
  /// Fraction of side friction shed under rotary motion, in [0, 1].
  double rotation_relief = 0.0;
  double bulk_density_g_cm3 = 0.0;
  /// Capture efficiency gain (dimensionless); see simulator mass law.
  double capture_gain = 0.0;
  std::string calibration;

  void validate() const;
};

SedimentSpec coarse_sand_preset();
SedimentSpec medium_sand_preset();
SedimentSpec silt_preset();
std::optional<SedimentSpec> sediment_preset(std::string_view name);

/// Fraction of the rim velocity that points down the hole:
/// v / sqrt(v^2 + (omega r)^2), or 1 when the rim is at rest.
double axial_fraction(double v_mm_s, double omega_rad_s, double radius_mm);

struct ResistanceForces {
  double tip_bearing_N = 0.0;
  double side_friction_N = 0.0;
};

/// Quasi-static resistance at a given embedment depth and steady kinematics.
/// Tip bearing: (c0 + c1 * depth) scaled by the tip annulus area relative to
/// the stock liner. Side friction: k_f * depth projected onto the feed axis
/// (friction acts opposite the rim velocity) and relieved under rotation:
/// F_t = k_f * depth * af * (1 - rotation_relief * (1 - af)).
ResistanceForces resistance_forces(const SedimentSpec& sediment, const CoreGeometry& geom,
                                   double depth_mm, double v_mm_s, double omega_rad_s);

/// Linear current model of the two 12 V DC motors. M1 (feed) current scales
/// with the axial force demand, M2 (spin) current with the torque demand;
/// both clamp at the shared sensor/protection limit.
struct MotorParams {
  double no_load_m1_A = 0.20;
  double amps_per_N = 0.010;
  double no_load_m2_A = 0.15;
  double amps_per_Nmm = 1.5e-4;
  double current_limit_A = 3.0;

  void validate() const;
};

struct MotorCurrents {
  double m1_A = 0.0;
  double m2_A = 0.0;
  bool at_limit = false;
};

MotorCurrents motor_currents(double force_demand_N, double torque_demand_Nmm,
                             const MotorParams& params);

}  // namespace sedcore
