#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "sedcore/objectives.hpp"

namespace sedcore {

/// Simplex-constrained preference weights: w1 weighs sampled mass, w2 weighs
/// work efficiency; w1 + w2 = 1.
struct WeightConfig {
  double w1 = 0.5;
  double w2 = 0.5;

  static WeightConfig of(double w1) { return WeightConfig{w1, 1.0 - w1}; }
  void validate() const;
};

struct SelectionResult {
  WeightConfig weights;
  PatternSpec chosen;
  double f1_norm = 0.0;
  double f2_norm = 0.0;
  /// w1 * f1_norm + w2 * f2_norm of the chosen row.
  double objective_value = 0.0;
  /// Other candidates within the tie tolerance of the minimum.
  std::vector<PatternSpec> ties;
};

/// Scalarized objective w1 * f1_norm + w2 * f2_norm of a non-excluded row.
double weighted_sum_value(const ObjectiveRow& row, const WeightConfig& weights);

/// Default tie tolerance. The published tables round to two decimals, which
/// can collapse near-ties; candidates within this band count as tied.
inline constexpr double kTieTolerance = 0.005;

/// Argmin of the weighted sum over the non-excluded rows. Current feasibility
/// is applied beforehand via feasibility_filter when a limit is configured.
/// Ties within tie_tol are resolved deterministically: lower f1_norm first,
/// then lexicographic (kind, v, omega_r, f_r); the runners-up are listed.
SelectionResult select_optimal(const ObjectiveTable& table, const WeightConfig& weights,
                               double tie_tol = kTieTolerance);

/// w1 = 0.1, 0.2, ..., 0.9.
std::vector<WeightConfig> default_weight_grid();

std::vector<SelectionResult> sweep_weights(const ObjectiveTable& table,
                                           std::span<const WeightConfig> grid,
                                           double tie_tol = kTieTolerance);

/// Rows not strictly dominated (A dominates B iff f1_A <= f1_B and
/// f2_A <= f2_B with at least one strict), sorted by f1_norm ascending.
/// Duplicate objective pairs are all kept.
std::vector<ObjectiveRow> pareto_front(const ObjectiveTable& table);

struct FeasibilityOutcome {
  std::vector<ObjectiveRow> kept;
  /// Removed rows with the offending reason ("current_limit").
  std::vector<std::pair<ObjectiveRow, std::string>> removed;
  /// Rows kept without any current log to check (e.g. transcribed fixtures).
  int unverified_constraint = 0;
};

/// Drops rows whose trials exceeded the per-motor current limit. Rows without
/// current data are kept and counted as unverified (the published tables
/// contain only constraint-respecting runs).
FeasibilityOutcome feasibility_filter(std::span<const ObjectiveRow> rows,
                                      double current_limit_A);

/// `w1,w2,f1,f2,F,kind,v_mm_s,omega_rad_s,f_r_hz,ties`
void write_sweep_csv(std::ostream& out, std::span<const SelectionResult> results);
/// `f1_norm,f2_norm,kind,v_mm_s,omega_rad_s,f_r_hz`
void write_pareto_csv(std::ostream& out, std::span<const ObjectiveRow> front);

}  // namespace sedcore
