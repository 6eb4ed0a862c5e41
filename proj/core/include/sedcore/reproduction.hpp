#pragma once

#include <array>
#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sedcore/optimizer.hpp"
#include "sedcore/svg.hpp"

namespace sedcore {

/// One expected row of the published weighted-sum results (per sediment,
/// nine weight configurations).
struct Table6Row {
  double w1 = 0.0;
  double f1 = 0.0;
  double f2 = 0.0;
  double objective_value = 0.0;
  PatternSpec pattern;
};

inline constexpr std::array<std::string_view, 3> kReproductionSediments = {
    "coarse_sand", "medium_sand", "silt"};

/// The embedded weighted-sum expectations ("coarse_sand", "medium_sand",
/// "silt"; also accepts the fixture suffixes "coarse", "medium", "silt").
std::span<const Table6Row> table6_expected(std::string_view sediment);

enum class RowVerdict { match, tie, mismatch };

struct RowDiff {
  Table6Row expected;
  SelectionResult computed;
  /// |w1 f1 + w2 f2 - F| recomputed from the printed objective pair.
  double arithmetic_gap = 0.0;
  RowVerdict verdict = RowVerdict::match;
  std::string note;
};

struct SedimentReproduction {
  std::string sediment;
  ObjectiveTable union_table;
  std::vector<SelectionResult> sweep;
  std::vector<ObjectiveRow> front;
  std::vector<RowDiff> diffs;
  int selection_matches = 0;
  int tie_misses = 0;
  int mismatches = 0;
};

struct ReproReport {
  std::vector<SedimentReproduction> sediments;
  int selection_matches = 0;
  int tie_misses = 0;
  int mismatches = 0;
  std::string diff_text;
  /// Deterministic report bundle, file name -> content.
  std::map<std::string, std::string> files;

  bool ok() const { return mismatches == 0; }
};

/// Loads the six fixture tables (table4_*.csv, table5_*.csv), forms the
/// per-sediment union pool (each table keeps its own normalization), runs the
/// default weight sweep and Pareto extraction, and diffs the selections and
/// recomputed objective values against the embedded expectations.
ReproReport reproduce_from_fixtures(const std::filesystem::path& fixture_dir,
                                    double value_tol = 0.01, double tie_tol = kTieTolerance);

/// Writes every bundle file atomically under out_dir.
void write_report_bundle(const ReproReport& report, const std::filesystem::path& out_dir);

}  // namespace sedcore
