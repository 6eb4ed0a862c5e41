#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sedcore/kinematics.hpp"
#include "sedcore/simulator.hpp"

namespace sedcore {

enum class NormalizationScope { per_table, joint };

std::string_view to_string(NormalizationScope scope);
std::optional<NormalizationScope> normalization_scope_from(std::string_view text);

/// One pattern's objective pair. f1 is the reciprocal sampled density
/// (desired volume / mean mass, cm^3/g; smaller = more mass), f2 the
/// reciprocal mean sampling power (duration / work, s/(N*mm); smaller = more
/// work-efficient). Rows with zero sampled mass are excluded from
/// normalization and selection. Raw values are absent on rows transcribed
/// from the published tables, which only report normalized values.
struct ObjectiveRow {
  PatternSpec pattern;
  std::optional<double> f1_raw;
  std::optional<double> f2_raw;
  std::optional<double> f1_norm;
  std::optional<double> f2_norm;
  bool excluded = false;
  int n_trials = 0;
  std::optional<double> max_current1_A;
  std::optional<double> max_current2_A;
};

struct ObjectiveTable {
  std::string sediment;
  std::vector<ObjectiveRow> rows;
  NormalizationScope scope = NormalizationScope::per_table;
  /// Set when a normalization pool had no spread (all values map to 1).
  bool degenerate_normalization = false;
};

/// Desired core volume pi * r_inner^2 * L_d, in cm^3.
double desired_volume_cm3(const CoreGeometry& geom, double target_depth_mm);

/// V_d / m_s; nullopt marks the excluded sentinel (no sample collected).
std::optional<double> objective_f1(double mass_g, double desired_volume_cm3);

/// duration / work; nullopt marks the excluded sentinel (no work performed).
std::optional<double> objective_f2(double work_Nmm, double duration_s);

struct NormalizeResult {
  std::vector<std::optional<double>> values;
  /// All inputs equal: everything maps to the best end (1).
  bool degenerate = false;
};

/// Affine min-max map onto [1, 10]: n = 1 + 9 (v - min) / (max - min).
/// Excluded entries (nullopt) pass through untouched and never shape the map.
NormalizeResult normalize_to_band(std::span<const std::optional<double>> values);

/// Aggregates replicate trials per pattern (arithmetic mean of mass and of
/// work/duration), computes raw objectives, applies the zero-mass exclusion,
/// and normalizes. All trials must share one sediment.
ObjectiveTable build_table(std::span<const TrialRecord> trials, const CoreGeometry& geom,
                           double target_depth_mm,
                           NormalizationScope scope = NormalizationScope::per_table);

/// Union of two tables of the same sediment. per_table keeps each table's own
/// normalized values (the published tables are normalized independently);
/// joint renormalizes from raw values over the merged pool. Duplicate pattern
/// keys must agree and collapse to one row.
ObjectiveTable merge_tables(const ObjectiveTable& a, const ObjectiveTable& b,
                            NormalizationScope scope = NormalizationScope::per_table);

/// `sediment,kind,v_mm_s,omega_rad_s,f_r_hz,f1_raw,f2_raw,f1_norm,f2_norm,excluded,n_trials`
void write_objective_csv(std::ostream& out, const ObjectiveTable& table);
ObjectiveTable read_objective_csv(std::istream& in, const std::string& source_name);
ObjectiveTable read_objective_csv_file(const std::filesystem::path& path);

}  // namespace sedcore
