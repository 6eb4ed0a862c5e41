#include <benchmark/benchmark.h>

#include <filesystem>

#include "sedcore/kinematics.hpp"
#include "sedcore/objectives.hpp"
#include "sedcore/optimizer.hpp"
#include "sedcore/simulator.hpp"
#include "sedcore/special_functions.hpp"
#include "sedcore/stats.hpp"

using namespace sedcore;

namespace {

ObjectiveTable fixture_union(const std::string& suffix) {
  const std::filesystem::path dir(SEDCORE_FIXTURE_DIR);
  return merge_tables(read_objective_csv_file(dir / ("table4_" + suffix + ".csv")),
                      read_objective_csv_file(dir / ("table5_" + suffix + ".csv")));
}

void BM_position_at(benchmark::State& state) {
  const PatternSpec p = PatternSpec::zigzag(38, 12, 30);
  const CoreGeometry geom;
  double t = 0.0;
  for (auto _ : state) {
    t += 1e-3;
    benchmark::DoNotOptimize(position_at(p, geom, t));
  }
}
BENCHMARK(BM_position_at);

void BM_path_length_zigzag(benchmark::State& state) {
  const PatternSpec p = PatternSpec::zigzag(22, 9, 30);
  const CoreGeometry geom;
  for (auto _ : state) benchmark::DoNotOptimize(path_length(p, geom, 5.0));
}
BENCHMARK(BM_path_length_zigzag);

void BM_simulate_trial_coarse(benchmark::State& state) {
  const PatternSpec p = PatternSpec::zigzag(38, 12, 30);
  const SedimentSpec sand = coarse_sand_preset();
  const CoreGeometry geom;
  const TrialConfig config;
  for (auto _ : state) benchmark::DoNotOptimize(simulate_trial(p, sand, geom, config));
}
BENCHMARK(BM_simulate_trial_coarse);

void BM_weight_sweep_fixture(benchmark::State& state) {
  const ObjectiveTable table = fixture_union("silt");
  const auto grid = default_weight_grid();
  for (auto _ : state) benchmark::DoNotOptimize(sweep_weights(table, grid));
}
BENCHMARK(BM_weight_sweep_fixture);

void BM_pareto_front_fixture(benchmark::State& state) {
  const ObjectiveTable table = fixture_union("silt");
  for (auto _ : state) benchmark::DoNotOptimize(pareto_front(table));
}
BENCHMARK(BM_pareto_front_fixture);

void BM_two_way_anova(benchmark::State& state) {
  std::vector<std::vector<std::vector<double>>> cells(
      4, std::vector<std::vector<double>>(5, std::vector<double>(3)));
  double y = 0.1;
  for (auto& row : cells)
    for (auto& cell : row)
      for (double& value : cell) value = (y += 0.7);
  for (auto _ : state) benchmark::DoNotOptimize(two_way_anova(cells));
}
BENCHMARK(BM_two_way_anova);

void BM_studentized_range_sf(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(studentized_range_sf(3.5, 20, 40));
}
BENCHMARK(BM_studentized_range_sf);

void BM_f_distribution_sf(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(f_distribution_sf(2.5, 3, 40));
}
BENCHMARK(BM_f_distribution_sf);

}  // namespace

BENCHMARK_MAIN();
