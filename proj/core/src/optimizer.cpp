#include "sedcore/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>

#include "sedcore/csv.hpp"
#include "sedcore/errors.hpp"

namespace sedcore {

void WeightConfig::validate() const {
  require_finite(w1, "w1");
  require_finite(w2, "w2");
  require(w1 >= 0.0 && w2 >= 0.0, "weights must be >= 0");
  require(std::abs(w1 + w2 - 1.0) <= 1e-12, "weights must sum to 1");
}

double weighted_sum_value(const ObjectiveRow& row, const WeightConfig& weights) {
  weights.validate();
  require(!row.excluded, "excluded row has no objective value");
  require(row.f1_norm.has_value() && row.f2_norm.has_value(),
          "row is missing normalized objectives");
  return weights.w1 * *row.f1_norm + weights.w2 * *row.f2_norm;
}

SelectionResult select_optimal(const ObjectiveTable& table, const WeightConfig& weights,
                               double tie_tol) {
  weights.validate();
  require(tie_tol >= 0.0, "tie tolerance must be >= 0");

  std::vector<ObjectiveRow> usable;
  for (const ObjectiveRow& row : table.rows)
    if (!row.excluded && row.f1_norm && row.f2_norm) usable.push_back(row);
  if (usable.empty()) throw no_solution_error("no feasible, non-excluded row to select from");

  double best = std::numeric_limits<double>::infinity();
  for (const ObjectiveRow& row : usable)
    best = std::min(best, weighted_sum_value(row, weights));

  std::vector<const ObjectiveRow*> tied;
  for (const ObjectiveRow& row : usable)
    if (weighted_sum_value(row, weights) <= best + tie_tol) tied.push_back(&row);

  std::sort(tied.begin(), tied.end(), [](const ObjectiveRow* a, const ObjectiveRow* b) {
    if (*a->f1_norm != *b->f1_norm) return *a->f1_norm < *b->f1_norm;
    return a->pattern < b->pattern;
  });

  const ObjectiveRow& chosen = *tied.front();
  SelectionResult result;
  result.weights = weights;
  result.chosen = chosen.pattern;
  result.f1_norm = *chosen.f1_norm;
  result.f2_norm = *chosen.f2_norm;
  result.objective_value = weighted_sum_value(chosen, weights);
  for (std::size_t i = 1; i < tied.size(); ++i) result.ties.push_back(tied[i]->pattern);
  return result;
}

std::vector<WeightConfig> default_weight_grid() {
  std::vector<WeightConfig> grid;
  for (int i = 1; i <= 9; ++i) grid.push_back(WeightConfig::of(i / 10.0));
  return grid;
}

std::vector<SelectionResult> sweep_weights(const ObjectiveTable& table,
                                           std::span<const WeightConfig> grid, double tie_tol) {
  require(!grid.empty(), "weight grid must not be empty");
  std::vector<SelectionResult> results;
  results.reserve(grid.size());
  for (const WeightConfig& w : grid) results.push_back(select_optimal(table, w, tie_tol));
  return results;
}

std::vector<ObjectiveRow> pareto_front(const ObjectiveTable& table) {
  std::vector<ObjectiveRow> usable;
  for (const ObjectiveRow& row : table.rows)
    if (!row.excluded && row.f1_norm && row.f2_norm) usable.push_back(row);
  require(!usable.empty(), "pareto front needs at least one non-excluded row");

  const auto dominates = [](const ObjectiveRow& a, const ObjectiveRow& b) {
    const bool no_worse = *a.f1_norm <= *b.f1_norm && *a.f2_norm <= *b.f2_norm;
    const bool strictly = *a.f1_norm < *b.f1_norm || *a.f2_norm < *b.f2_norm;
    return no_worse && strictly;
  };

  std::vector<ObjectiveRow> front;
  for (const ObjectiveRow& candidate : usable) {
    bool dominated = false;
    for (const ObjectiveRow& other : usable) {
      if (dominates(other, candidate)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) front.push_back(candidate);
  }
  std::sort(front.begin(), front.end(), [](const ObjectiveRow& a, const ObjectiveRow& b) {
    if (*a.f1_norm != *b.f1_norm) return *a.f1_norm < *b.f1_norm;
    if (*a.f2_norm != *b.f2_norm) return *a.f2_norm < *b.f2_norm;
    return a.pattern < b.pattern;
  });
  return front;
}

FeasibilityOutcome feasibility_filter(std::span<const ObjectiveRow> rows,
                                      double current_limit_A) {
  require(current_limit_A > 0.0, "current limit must be > 0");
  FeasibilityOutcome out;
  for (const ObjectiveRow& row : rows) {
    if (row.max_current1_A.has_value() && row.max_current2_A.has_value()) {
      if (*row.max_current1_A > current_limit_A || *row.max_current2_A > current_limit_A) {
        out.removed.emplace_back(row, "current_limit");
        continue;
      }
    } else {
      ++out.unverified_constraint;
    }
    out.kept.push_back(row);
  }
  return out;
}

void write_sweep_csv(std::ostream& out, std::span<const SelectionResult> results) {
  out << "w1,w2,f1,f2,F,kind,v_mm_s,omega_rad_s,f_r_hz,ties\n";
  for (const SelectionResult& r : results) {
    out << fixed(r.weights.w1, 3) << ',' << fixed(r.weights.w2, 3) << ',' << fixed(r.f1_norm, 2)
        << ',' << fixed(r.f2_norm, 2) << ',' << fixed(r.objective_value, 3) << ','
        << to_string(r.chosen.kind) << ',' << fixed(r.chosen.v_mm_s, 0) << ','
        << fixed(r.chosen.omega_rad_s, 0) << ',' << fixed(r.chosen.f_r_hz, 0) << ',';
    for (std::size_t i = 0; i < r.ties.size(); ++i) {
      if (i > 0) out << ';';
      out << r.ties[i].label();
    }
    out << '\n';
  }
}

void write_pareto_csv(std::ostream& out, std::span<const ObjectiveRow> front) {
  out << "f1_norm,f2_norm,kind,v_mm_s,omega_rad_s,f_r_hz\n";
  for (const ObjectiveRow& row : front) {
    out << fixed(row.f1_norm.value(), 2) << ',' << fixed(row.f2_norm.value(), 2) << ','
        << to_string(row.pattern.kind) << ',' << fixed(row.pattern.v_mm_s, 0) << ','
        << fixed(row.pattern.omega_rad_s, 0) << ',' << fixed(row.pattern.f_r_hz, 0) << '\n';
  }
}

}  // namespace sedcore
