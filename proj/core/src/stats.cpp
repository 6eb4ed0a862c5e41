#include "sedcore/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <ostream>

#include "sedcore/csv.hpp"
#include "sedcore/errors.hpp"
#include "sedcore/rng.hpp"
#include "sedcore/special_functions.hpp"

namespace sedcore {

AnovaResult two_way_anova(const std::vector<std::vector<std::vector<double>>>& cells) {
  const std::size_t a = cells.size();
  require(a >= 2, "two-way design needs at least 2 levels of factor A");
  const std::size_t b = cells.front().size();
  require(b >= 2, "two-way design needs at least 2 levels of factor B");
  std::size_t n = 0;
  for (const auto& row : cells) {
    require(row.size() == b, "unbalanced design: ragged factor-B levels");
    for (const auto& cell : row) {
      if (n == 0) n = cell.size();
      require(cell.size() == n, "unbalanced design: unequal replicate counts");
    }
  }
  require(n >= 2, "need at least 2 replicates per cell for an error term");

  const double N = static_cast<double>(a * b * n);
  double total = 0.0, total_sq = 0.0;
  std::vector<double> row_totals(a, 0.0), col_totals(b, 0.0);
  std::vector<std::vector<double>> cell_totals(a, std::vector<double>(b, 0.0));
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < b; ++j)
      for (double y : cells[i][j]) {
        require_finite(y, "response value");
        total += y;
        total_sq += y * y;
        row_totals[i] += y;
        col_totals[j] += y;
        cell_totals[i][j] += y;
      }

  const double correction = total * total / N;
  const double bn = static_cast<double>(b * n);
  const double an = static_cast<double>(a * n);

  double ss_a = -correction, ss_b = -correction, ss_cells = -correction;
  for (double t : row_totals) ss_a += t * t / bn;
  for (double t : col_totals) ss_b += t * t / an;
  for (const auto& row : cell_totals)
    for (double t : row) ss_cells += t * t / static_cast<double>(n);
  double ss_total = total_sq - correction;

  // Floating cancellation can leave tiny negatives on zero-variance factors.
  const double floor_eps = 1e-12 * std::max(1.0, total_sq);
  const auto clamp0 = [&](double v) { return v < floor_eps ? std::max(0.0, v) : v; };
  ss_a = clamp0(ss_a);
  ss_b = clamp0(ss_b);
  ss_cells = clamp0(ss_cells);
  ss_total = clamp0(ss_total);
  const double ss_ab = clamp0(ss_cells - ss_a - ss_b);
  const double ss_error = clamp0(ss_total - ss_cells);

  AnovaResult r;
  r.ss_a = ss_a;
  r.ss_b = ss_b;
  r.ss_ab = ss_ab;
  r.ss_error = ss_error;
  r.ss_total = ss_total;
  r.df_a = static_cast<int>(a) - 1;
  r.df_b = static_cast<int>(b) - 1;
  r.df_ab = r.df_a * r.df_b;
  r.df_error = static_cast<int>(a * b) * (static_cast<int>(n) - 1);

  const double ms_error = ss_error / r.df_error;
  const auto f_and_p = [&](double ss, int df, double& f_out, double& p_out) {
    const double ms = ss / df;
    if (ms <= floor_eps) {
      f_out = 0.0;
      p_out = 1.0;
      return;
    }
    if (ms_error <= floor_eps) {
      f_out = std::numeric_limits<double>::infinity();
      p_out = 0.0;
      return;
    }
    f_out = ms / ms_error;
    p_out = f_distribution_sf(f_out, df, r.df_error);
  };
  f_and_p(ss_a, r.df_a, r.f_a, r.p_a);
  f_and_p(ss_b, r.df_b, r.f_b, r.p_b);
  f_and_p(ss_ab, r.df_ab, r.f_ab, r.p_ab);
  return r;
}

void write_anova_csv(std::ostream& out, const AnovaResult& r, const std::string& factor_a,
                     const std::string& factor_b) {
  out << "source,ss,df,F,p\n";
  const auto line = [&](const std::string& source, double ss, int df, double f, double p,
                        bool has_test) {
    out << source << ',' << fixed(ss, 6) << ',' << df << ',';
    if (has_test) {
      out << (std::isinf(f) ? std::string("inf") : fixed(f, 6)) << ',' << fixed(p, 9);
    } else {
      out << ',';
    }
    out << '\n';
  };
  line(factor_a, r.ss_a, r.df_a, r.f_a, r.p_a, true);
  line(factor_b, r.ss_b, r.df_b, r.f_b, r.p_b, true);
  line(factor_a + ":" + factor_b, r.ss_ab, r.df_ab, r.f_ab, r.p_ab, true);
  line("error", r.ss_error, r.df_error, 0.0, 0.0, false);
}

ComparisonOutcome multiple_comparison(const std::vector<std::vector<double>>& groups,
                                      double alpha, bool larger_is_better) {
  const std::size_t k = groups.size();
  require(k >= 2, "multiple comparison needs at least 2 groups");
  require(alpha > 0.0 && alpha < 1.0, "alpha must lie in (0, 1)");
  const std::size_t n = groups.front().size();
  require(n >= 2, "multiple comparison needs at least 2 replicates per group");
  for (const auto& g : groups)
    require(g.size() == n, "multiple comparison needs equal replicate counts");

  std::vector<double> means(k, 0.0);
  double ss_within = 0.0;
  for (std::size_t g = 0; g < k; ++g) {
    means[g] = std::accumulate(groups[g].begin(), groups[g].end(), 0.0) /
               static_cast<double>(n);
    for (double y : groups[g]) ss_within += (y - means[g]) * (y - means[g]);
  }
  const double df_error = static_cast<double>(k * (n - 1));
  const double ms_within = ss_within / df_error;
  const double se = std::sqrt(ms_within / static_cast<double>(n));

  ComparisonOutcome outcome;
  outcome.alpha = alpha;
  std::vector<double> quantiles;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      PairComparison pc;
      pc.group_a = i;
      pc.group_b = j;
      pc.mean_diff = means[i] - means[j];
      if (se > 0.0) quantiles.push_back(std::abs(pc.mean_diff) / se);
      outcome.pairs.push_back(pc);
    }
  }
  std::vector<double> survivals;
  if (se > 0.0)
    survivals = studentized_range_sf_batch(quantiles, static_cast<int>(k), df_error);
  std::size_t next = 0;
  for (PairComparison& pc : outcome.pairs) {
    pc.p_adj = se > 0.0 ? survivals[next++] : (pc.mean_diff == 0.0 ? 1.0 : 0.0);
    pc.significant = pc.p_adj < alpha;
  }

  std::size_t best = 0;
  for (std::size_t g = 1; g < k; ++g) {
    if (larger_is_better ? means[g] > means[best] : means[g] < means[best]) best = g;
  }
  outcome.selected.push_back(best);
  for (std::size_t g = 0; g < k; ++g) {
    if (g == best) continue;
    for (const PairComparison& pc : outcome.pairs) {
      const bool this_pair = (pc.group_a == best && pc.group_b == g) ||
                             (pc.group_a == g && pc.group_b == best);
      if (this_pair && !pc.significant) {
        outcome.selected.push_back(g);
        break;
      }
    }
  }
  std::sort(outcome.selected.begin(), outcome.selected.end());
  return outcome;
}

void write_comparison_csv(std::ostream& out, const ComparisonOutcome& outcome,
                          std::span<const std::string> labels) {
  out << "pattern_a,pattern_b,mean_diff,p_adj,significant\n";
  for (const PairComparison& pc : outcome.pairs) {
    const std::string a = pc.group_a < labels.size() ? labels[pc.group_a]
                                                     : std::to_string(pc.group_a);
    const std::string b = pc.group_b < labels.size() ? labels[pc.group_b]
                                                     : std::to_string(pc.group_b);
    out << a << ',' << b << ',' << fixed(pc.mean_diff, 6) << ',' << fixed(pc.p_adj, 9) << ','
        << (pc.significant ? "true" : "false") << '\n';
  }
}

std::vector<std::size_t> srs_order(std::size_t n_runs, std::uint64_t seed) {
  require(n_runs >= 1, "need at least one run to order");
  std::vector<std::size_t> order(n_runs);
  std::iota(order.begin(), order.end(), std::size_t{0});
  SplitMix64 rng(seed);
  for (std::size_t i = n_runs - 1; i > 0; --i) {
    const std::size_t j = static_cast<std::size_t>(rng.below(i + 1));
    std::swap(order[i], order[j]);
  }
  return order;
}

SummaryStat mass_summary(std::span<const double> values) {
  require(!values.empty(), "summary needs at least one value");
  SummaryStat s;
  s.n = values.size();
  s.mean = std::accumulate(values.begin(), values.end(), 0.0) /
           static_cast<double>(values.size());
  if (values.size() >= 2) {
    double ss = 0.0;
    for (double v : values) ss += (v - s.mean) * (v - s.mean);
    s.stddev = std::sqrt(ss / static_cast<double>(values.size() - 1));
    s.stddev_defined = true;
  }
  return s;
}

double percent_change(double baseline_mean, double new_mean) {
  require_finite(baseline_mean, "baseline mean");
  require_finite(new_mean, "new mean");
  require(baseline_mean > 0.0, "baseline mean must be > 0");
  return 100.0 * (new_mean - baseline_mean) / baseline_mean;
}

RecoveryRatio recovery_ratio(double core_length_mm, double penetration_depth_mm) {
  require_finite(core_length_mm, "core length");
  require_finite(penetration_depth_mm, "penetration depth");
  require(penetration_depth_mm > 0.0, "penetration depth must be > 0");
  require(core_length_mm >= 0.0, "core length must be >= 0");
  RecoveryRatio r;
  r.value = core_length_mm / penetration_depth_mm;
  r.exceeds_unity = r.value > 1.0;
  return r;
}

}  // namespace sedcore
