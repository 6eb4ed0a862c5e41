#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <limits>
#include <vector>

#include "sedcore/errors.hpp"
#include "sedcore/optimizer.hpp"
#include "sedcore/reproduction.hpp"
#include "sedcore/rng.hpp"

using namespace sedcore;

namespace {

ObjectiveRow norm_row(const PatternSpec& pattern, double f1, double f2) {
  ObjectiveRow row;
  row.pattern = pattern;
  row.f1_norm = f1;
  row.f2_norm = f2;
  row.n_trials = 3;
  return row;
}

ObjectiveTable table_of(std::vector<ObjectiveRow> rows, const std::string& sediment = "synthetic") {
  ObjectiveTable t;
  t.sediment = sediment;
  t.rows = std::move(rows);
  return t;
}

ObjectiveTable fixture_union(const std::string& suffix) {
  const std::filesystem::path dir(SEDCORE_FIXTURE_DIR);
  const ObjectiveTable step1 = read_objective_csv_file(dir / ("table4_" + suffix + ".csv"));
  const ObjectiveTable step2 = read_objective_csv_file(dir / ("table5_" + suffix + ".csv"));
  return merge_tables(step1, step2);
}

// Sweep-line front oracle: sort by (f1, f2) and keep rows whose f2 is no
// worse than everything already kept. Independent of the pairwise scan.
std::vector<ObjectiveRow> front_oracle(const ObjectiveTable& table) {
  std::vector<ObjectiveRow> rows;
  for (const ObjectiveRow& row : table.rows)
    if (!row.excluded && row.f1_norm && row.f2_norm) rows.push_back(row);
  std::sort(rows.begin(), rows.end(), [](const ObjectiveRow& a, const ObjectiveRow& b) {
    if (*a.f1_norm != *b.f1_norm) return *a.f1_norm < *b.f1_norm;
    if (*a.f2_norm != *b.f2_norm) return *a.f2_norm < *b.f2_norm;
    return a.pattern < b.pattern;
  });
  std::vector<ObjectiveRow> front;
  double best_f2 = std::numeric_limits<double>::infinity();
  double best_f1 = std::numeric_limits<double>::infinity();
  for (const ObjectiveRow& row : rows) {
    const bool dominated =
        (*row.f2_norm > best_f2) ||
        (*row.f2_norm == best_f2 && *row.f1_norm > best_f1) ;
    if (!dominated) {
      front.push_back(row);
      if (*row.f2_norm < best_f2) {
        best_f2 = *row.f2_norm;
        best_f1 = *row.f1_norm;
      }
    }
  }
  return front;
}

bool same_front(const std::vector<ObjectiveRow>& a, const std::vector<ObjectiveRow>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!(a[i].pattern == b[i].pattern)) return false;
  return true;
}

}  // namespace

TEST_CASE("weighted sum of normalized objectives") {
  CHECK(weighted_sum_value(norm_row(PatternSpec::zigzag(29, 12, 30), 1.00, 3.39),
                           WeightConfig::of(0.9)) == doctest::Approx(1.239));
  CHECK(weighted_sum_value(norm_row(PatternSpec::linear(29), 4.41, 1.00),
                           WeightConfig::of(0.1)) == doctest::Approx(1.341));
  // A convex combination of equal objectives is that value for any weight.
  for (double w1 : {0.0, 0.25, 0.5, 0.8, 1.0})
    CHECK(weighted_sum_value(norm_row(PatternSpec::linear(15), 3.3, 3.3),
                             WeightConfig::of(w1)) == doctest::Approx(3.3));

  ObjectiveRow excluded = norm_row(PatternSpec::linear(15), 2.0, 2.0);
  excluded.excluded = true;
  CHECK_THROWS_AS(weighted_sum_value(excluded, WeightConfig::of(0.5)), validation_error);
  const WeightConfig broken_simplex{0.6, 0.6};
  CHECK_THROWS_AS(broken_simplex.validate(), validation_error);
  const WeightConfig negative{-0.1, 1.1};
  CHECK_THROWS_AS(negative.validate(), validation_error);
}

TEST_CASE("select_optimal reproduces published picks on the fixture unions") {
  const ObjectiveTable medium = fixture_union("medium");
  const SelectionResult balanced = select_optimal(medium, WeightConfig::of(0.5));
  CHECK(balanced.chosen == PatternSpec::helical(29, 12));
  CHECK(balanced.objective_value == doctest::Approx(1.205).epsilon(1e-9));

  const ObjectiveTable coarse = fixture_union("coarse");
  const SelectionResult power = select_optimal(coarse, WeightConfig::of(0.1));
  CHECK(power.chosen == PatternSpec::zigzag(38, 12, 10));
  CHECK(power.objective_value == doctest::Approx(1.107).epsilon(1e-9));
}

TEST_CASE("single-row tables select that row for every weight") {
  const ObjectiveTable one = table_of({norm_row(PatternSpec::helical(22, 6), 4.0, 2.0)});
  for (double w1 : {0.1, 0.5, 0.9})
    CHECK(select_optimal(one, WeightConfig::of(w1)).chosen == PatternSpec::helical(22, 6));
}

TEST_CASE("empty feasible set raises the no-solution error") {
  ObjectiveRow only = norm_row(PatternSpec::linear(15), 2.0, 2.0);
  only.excluded = true;
  only.f1_norm.reset();
  only.f2_norm.reset();
  const ObjectiveTable empty = table_of({only});
  CHECK_THROWS_AS(select_optimal(empty, WeightConfig::of(0.5)), no_solution_error);
}

TEST_CASE("sweep over the default grid matches the published silt selections") {
  const ObjectiveTable silt = fixture_union("silt");
  const auto grid = default_weight_grid();
  const auto sweep = sweep_weights(silt, grid);
  REQUIRE(sweep.size() == 9);
  const auto expected = table6_expected("silt");
  for (std::size_t i = 0; i < sweep.size(); ++i) CHECK(sweep[i].chosen == expected[i].pattern);
}

TEST_CASE("sweep handles singleton grids and all-tied tables deterministically") {
  const ObjectiveTable one_weight = fixture_union("coarse");
  const std::vector<WeightConfig> grid = {WeightConfig::of(0.5)};
  CHECK(sweep_weights(one_weight, grid).size() == 1);

  const ObjectiveTable tied = table_of({norm_row(PatternSpec::helical(29, 12), 2.0, 2.0),
                                        norm_row(PatternSpec::helical(22, 6), 2.0, 2.0),
                                        norm_row(PatternSpec::linear(15), 2.0, 2.0)});
  for (double w1 : {0.1, 0.5, 0.9}) {
    const SelectionResult pick = select_optimal(tied, WeightConfig::of(w1));
    // Lexicographic tie-break: linear sorts before helical.
    CHECK(pick.chosen == PatternSpec::linear(15));
    CHECK(pick.ties.size() == 2);
  }
}

TEST_CASE("pareto front on a worked example") {
  const ObjectiveTable table = table_of({norm_row(PatternSpec::zigzag(38, 12, 10), 2.07, 1.00),
                                         norm_row(PatternSpec::zigzag(38, 12, 30), 1.87, 1.05),
                                         norm_row(PatternSpec::linear(38), 4.67, 1.11)});
  const auto front = pareto_front(table);
  REQUIRE(front.size() == 2);
  CHECK(front[0].pattern == PatternSpec::zigzag(38, 12, 30));
  CHECK(front[1].pattern == PatternSpec::zigzag(38, 12, 10));

  const ObjectiveTable single = table_of({norm_row(PatternSpec::linear(38), 3.0, 3.0)});
  CHECK(pareto_front(single).size() == 1);

  const ObjectiveTable dominated = table_of({norm_row(PatternSpec::linear(38), 1.0, 1.0),
                                             norm_row(PatternSpec::linear(15), 2.0, 2.0)});
  const auto only_a = pareto_front(dominated);
  REQUIRE(only_a.size() == 1);
  CHECK(only_a[0].pattern == PatternSpec::linear(38));

  // Duplicate objective pairs both stay on the front.
  const ObjectiveTable twins = table_of({norm_row(PatternSpec::linear(38), 1.5, 1.5),
                                         norm_row(PatternSpec::helical(22, 6), 1.5, 1.5)});
  CHECK(pareto_front(twins).size() == 2);
}

TEST_CASE("pareto front equals the sweep-line oracle on every fixture union") {
  for (const char* suffix : {"coarse", "medium", "silt"}) {
    const ObjectiveTable table = fixture_union(suffix);
    CHECK(same_front(pareto_front(table), front_oracle(table)));
  }
}

TEST_CASE("weighted-sum winners with interior weights lie on the front") {
  for (const char* suffix : {"coarse", "medium", "silt"}) {
    const ObjectiveTable table = fixture_union(suffix);
    const auto front = pareto_front(table);
    for (const auto& result : sweep_weights(table, default_weight_grid())) {
      const bool member = std::any_of(front.begin(), front.end(), [&](const ObjectiveRow& row) {
        return row.pattern == result.chosen;
      });
      CHECK(member);
    }
  }
}

TEST_CASE("F(w) is concave on the fixture tables") {
  for (const char* suffix : {"coarse", "medium", "silt"}) {
    const auto sweep = sweep_weights(fixture_union(suffix), default_weight_grid());
    for (std::size_t i = 1; i + 1 < sweep.size(); ++i) {
      const double second_difference = sweep[i - 1].objective_value +
                                       sweep[i + 1].objective_value -
                                       2.0 * sweep[i].objective_value;
      CHECK(second_difference <= 1e-9);
    }
  }
}

TEST_CASE("adding a dominated row changes nothing") {
  const ObjectiveTable base = fixture_union("coarse");
  ObjectiveTable padded = base;
  padded.rows.push_back(norm_row(PatternSpec::zigzag(20, 5, 20), 9.99, 9.99));

  CHECK(same_front(pareto_front(base), pareto_front(padded)));
  const auto grid = default_weight_grid();
  const auto a = sweep_weights(base, grid);
  const auto b = sweep_weights(padded, grid);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].chosen == b[i].chosen);
    CHECK(a[i].objective_value == doctest::Approx(b[i].objective_value).epsilon(1e-15));
  }
}

TEST_CASE("row order never affects results") {
  ObjectiveTable shuffled = fixture_union("silt");
  SplitMix64 rng(23);
  for (std::size_t i = shuffled.rows.size() - 1; i > 0; --i)
    std::swap(shuffled.rows[i], shuffled.rows[rng.below(i + 1)]);

  const ObjectiveTable original = fixture_union("silt");
  CHECK(same_front(pareto_front(original), pareto_front(shuffled)));
  const auto grid = default_weight_grid();
  const auto a = sweep_weights(original, grid);
  const auto b = sweep_weights(shuffled, grid);
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].chosen == b[i].chosen);
}

TEST_CASE("feasibility filter drops rows above the current limit") {
  ObjectiveRow fine = norm_row(PatternSpec::helical(29, 12), 2.0, 2.0);
  fine.max_current1_A = 2.9;
  fine.max_current2_A = 1.1;
  ObjectiveRow hot = norm_row(PatternSpec::helical(38, 12), 1.5, 1.5);
  hot.max_current1_A = 1.0;
  hot.max_current2_A = 3.2;
  ObjectiveRow fixture_row = norm_row(PatternSpec::linear(29), 3.0, 3.0);  // no current log

  const std::vector<ObjectiveRow> rows = {fine, hot, fixture_row};
  const FeasibilityOutcome outcome = feasibility_filter(rows, 3.0);
  REQUIRE(outcome.kept.size() == 2);
  CHECK(outcome.kept[0].pattern == fine.pattern);
  CHECK(outcome.kept[1].pattern == fixture_row.pattern);
  REQUIRE(outcome.removed.size() == 1);
  CHECK(outcome.removed[0].first.pattern == hot.pattern);
  CHECK(outcome.removed[0].second == "current_limit");
  CHECK(outcome.unverified_constraint == 1);
}
