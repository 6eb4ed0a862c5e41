#include "sedcore/penetration.hpp"

#include <algorithm>
#include <cmath>

#include "sedcore/errors.hpp"

namespace sedcore {

ForceBalance penetration_force(double external_N, double buoyant_weight_N, double tip_bearing_N,
                               double side_friction_N) {
  require_finite(external_N, "external force");
  require_finite(buoyant_weight_N, "buoyant weight");
  require_finite(tip_bearing_N, "tip bearing");
  require_finite(side_friction_N, "side friction");
  require(tip_bearing_N >= 0.0, "tip bearing must be >= 0");
  require(side_friction_N >= 0.0, "side friction must be >= 0");

  ForceBalance fb;
  fb.external_N = external_N;
  fb.buoyant_weight_N = buoyant_weight_N;
  fb.tip_bearing_N = tip_bearing_N;
  fb.side_friction_N = side_friction_N;
  fb.net_N = external_N + buoyant_weight_N - tip_bearing_N - side_friction_N;
  fb.can_penetrate = fb.net_N > 0.0;
  return fb;
}

void SedimentSpec::validate() const {
  require(!name.empty(), "sediment needs a name");
  require_finite(d50_um, "d50");
  require(d50_um > 0.0, "d50 must be > 0");
  for (double c : {bearing_intercept_N, bearing_gradient_N_mm, friction_coeff_N_mm,
                   rotation_relief, bulk_density_g_cm3, capture_gain}) {
    require_finite(c, "sediment coefficient");
    require(c >= 0.0, "sediment coefficients must be >= 0");
  }
  require(rotation_relief <= 1.0, "rotation relief must lie in [0, 1]");
}

SedimentSpec coarse_sand_preset() {
  SedimentSpec s;
  s.name = "coarse_sand";
  s.d50_um = 409.85;
  s.usda_class = "sand";
  s.bearing_intercept_N = 25.0;
  s.bearing_gradient_N_mm = 0.18;
  s.friction_coeff_N_mm = 9.0;
  s.rotation_relief = 0.60;
  s.bulk_density_g_cm3 = 1.95;
  s.capture_gain = 1.2;
  s.calibration = "qualitative";
  return s;
}

SedimentSpec medium_sand_preset() {
  SedimentSpec s;
  s.name = "medium_sand";
  s.d50_um = 408.58;
  s.usda_class = "sand";
  s.bearing_intercept_N = 20.0;
  s.bearing_gradient_N_mm = 0.25;
  s.friction_coeff_N_mm = 8.0;
  s.rotation_relief = 0.50;
  s.bulk_density_g_cm3 = 1.85;
  s.capture_gain = 1.0;
  s.calibration = "qualitative";
  return s;
}

SedimentSpec silt_preset() {
  SedimentSpec s;
  s.name = "silt";
  s.d50_um = 45.26;
  s.usda_class = "silt";
  s.bearing_intercept_N = 10.0;
  s.bearing_gradient_N_mm = 1.0;
  s.friction_coeff_N_mm = 0.2;
  s.rotation_relief = 0.10;
  s.bulk_density_g_cm3 = 1.60;
  s.capture_gain = 2.5;
  s.calibration = "qualitative";
  return s;
}

std::optional<SedimentSpec> sediment_preset(std::string_view name) {
  if (name == "coarse_sand") return coarse_sand_preset();
  if (name == "medium_sand") return medium_sand_preset();
  if (name == "silt") return silt_preset();
  return std::nullopt;
}

double axial_fraction(double v, double omega, double r) {
  const double rim = std::hypot(v, omega * r);
  if (rim == 0.0) return 1.0;
  return v / rim;
}

ResistanceForces resistance_forces(const SedimentSpec& sediment, const CoreGeometry& geom,
                                   double depth_mm, double v_mm_s, double omega_rad_s) {
  sediment.validate();
  geom.validate();
  require_finite(depth_mm, "depth");
  require_finite(v_mm_s, "feed rate");
  require_finite(omega_rad_s, "angular speed");
  require(depth_mm >= 0.0, "depth must be >= 0");
  require(v_mm_s >= 0.0 && omega_rad_s >= 0.0, "kinematics must be >= 0");

  const double area_factor =
      geom.tip_annulus_area_mm2() / CoreGeometry::stock_liner().tip_annulus_area_mm2();
  const double af = axial_fraction(v_mm_s, omega_rad_s, geom.kinematic_radius_mm);
  const double relief = 1.0 - sediment.rotation_relief * (1.0 - af);

  ResistanceForces out;
  out.tip_bearing_N =
      (sediment.bearing_intercept_N + sediment.bearing_gradient_N_mm * depth_mm) * area_factor;
  out.side_friction_N = sediment.friction_coeff_N_mm * depth_mm * af * relief;
  return out;
}

void MotorParams::validate() const {
  for (double c : {no_load_m1_A, amps_per_N, no_load_m2_A, amps_per_Nmm, current_limit_A}) {
    require_finite(c, "motor parameter");
    require(c >= 0.0, "motor parameters must be >= 0");
  }
  require(current_limit_A > 0.0, "current limit must be > 0");
}

MotorCurrents motor_currents(double force_demand_N, double torque_demand_Nmm,
                             const MotorParams& params) {
  params.validate();
  require_finite(force_demand_N, "force demand");
  require_finite(torque_demand_Nmm, "torque demand");
  require(force_demand_N >= 0.0 && torque_demand_Nmm >= 0.0, "demands must be >= 0");

  const double c1 = params.no_load_m1_A + params.amps_per_N * force_demand_N;
  const double c2 = params.no_load_m2_A + params.amps_per_Nmm * torque_demand_Nmm;
  MotorCurrents out;
  out.at_limit = c1 > params.current_limit_A || c2 > params.current_limit_A;
  out.m1_A = std::min(c1, params.current_limit_A);
  out.m2_A = std::min(c2, params.current_limit_A);
  return out;
}

}  // namespace sedcore
