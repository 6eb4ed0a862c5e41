#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace sedcore {

/// Classical balanced two-way fixed-effects decomposition with interaction.
struct AnovaResult {
  double ss_a = 0.0, ss_b = 0.0, ss_ab = 0.0, ss_error = 0.0, ss_total = 0.0;
  int df_a = 0, df_b = 0, df_ab = 0, df_error = 0;
  double f_a = 0.0, f_b = 0.0, f_ab = 0.0;
  double p_a = 1.0, p_b = 1.0, p_ab = 1.0;
};

/// cells[i][j] holds the n replicate responses of factor-A level i and
/// factor-B level j. Requires a balanced design with a, b >= 2 and n >= 2.
/// Zero-variance data reports p = 1 (machine-readable instead of NaN).
AnovaResult two_way_anova(const std::vector<std::vector<std::vector<double>>>& cells);

/// `source,ss,df,F,p` rows for A, B, AB, error.
void write_anova_csv(std::ostream& out, const AnovaResult& result,
                     const std::string& factor_a = "A", const std::string& factor_b = "B");

struct PairComparison {
  std::size_t group_a = 0;
  std::size_t group_b = 0;
  double mean_diff = 0.0;  // mean(a) - mean(b)
  double p_adj = 1.0;      // Tukey HSD adjusted p-value
  bool significant = false;
};

struct ComparisonOutcome {
  std::vector<PairComparison> pairs;
  /// Indices of the best-mean group plus every group not significantly
  /// different from it.
  std::vector<std::size_t> selected;
  double alpha = 0.05;
};

/// All-pairs Tukey HSD over groups with equal replicate counts (n >= 2).
/// larger_is_better picks which end counts as best for the selection set
/// (true for sampled mass).
ComparisonOutcome multiple_comparison(const std::vector<std::vector<double>>& groups,
                                      double alpha, bool larger_is_better = true);

/// `pattern_a,pattern_b,mean_diff,p_adj,significant`; labels index the groups.
void write_comparison_csv(std::ostream& out, const ComparisonOutcome& outcome,
                          std::span<const std::string> labels);

/// Uniform random run order (seeded Fisher-Yates over 0..n_runs-1).
std::vector<std::size_t> srs_order(std::size_t n_runs, std::uint64_t seed);

struct SummaryStat {
  double mean = 0.0;
  double stddev = 0.0;  // sample (n-1); reported 0 when undefined
  std::size_t n = 0;
  bool stddev_defined = false;
};

SummaryStat mass_summary(std::span<const double> values);

/// 100 * (new - baseline) / baseline.
double percent_change(double baseline_mean, double new_mean);

struct RecoveryRatio {
  double value = 0.0;
  bool exceeds_unity = false;
};

/// Core length over penetration depth (A/B); flags ratios above 1.
RecoveryRatio recovery_ratio(double core_length_mm, double penetration_depth_mm);

}  // namespace sedcore
