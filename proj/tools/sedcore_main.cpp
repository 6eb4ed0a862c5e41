// sedcore command-line frontend: trajectory export, trial simulation,
// objective tables, weighted-sum optimization, Pareto fronts, ANOVA, and the
// fixture-based reproduction of the published result tables.

#include <clocale>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "sedcore/csv.hpp"
#include "sedcore/errors.hpp"
#include "sedcore/kinematics.hpp"
#include "sedcore/objectives.hpp"
#include "sedcore/optimizer.hpp"
#include "sedcore/penetration.hpp"
#include "sedcore/reproduction.hpp"
#include "sedcore/rng.hpp"
#include "sedcore/simulator.hpp"
#include "sedcore/stats.hpp"
#include "sedcore/svg.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitReproductionMismatch = 3;

struct RunConfig {
  sedcore::CoreGeometry geometry;
  double target_depth_mm = 200.0;
  double current_limit_A = 3.0;
  double dt_s = 1e-3;
  double feed_force_N = 147.1;
  double buoyant_weight_N = 10.0;
  int replicates = 3;
  double noise_rel = 0.0;
  std::uint64_t seed = 0;
  double alpha = 0.05;
  sedcore::NormalizationScope scope = sedcore::NormalizationScope::per_table;
  std::vector<double> weight_grid_w1 = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
  double tie_tolerance = sedcore::kTieTolerance;
  bool platform_constrained = true;
  std::string output_dir = "out";
};

void read_geometry(const json& j, sedcore::CoreGeometry& geom) {
  const std::map<std::string, double*> fields = {
      {"outer_diameter_mm", &geom.outer_diameter_mm},
      {"inner_diameter_mm", &geom.inner_diameter_mm},
      {"wall_thickness_mm", &geom.wall_thickness_mm},
      {"liner_length_mm", &geom.liner_length_mm},
      {"kinematic_radius_mm", &geom.kinematic_radius_mm},
  };
  for (const auto& [key, value] : j.items()) {
    const auto it = fields.find(key);
    if (it == fields.end()) throw sedcore::validation_error("unknown geometry key '" + key + "'");
    *it->second = value.get<double>();
  }
}

RunConfig load_config(const std::string& path) {
  RunConfig config;
  if (path.empty()) return config;
  std::ifstream in(path);
  sedcore::require(in.good(), "cannot open config file " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw sedcore::validation_error(std::string("config parse error: ") + e.what());
  }
  for (const auto& [key, value] : j.items()) {
    if (key == "geometry") {
      read_geometry(value, config.geometry);
    } else if (key == "target_depth_mm") {
      config.target_depth_mm = value.get<double>();
    } else if (key == "current_limit_A") {
      config.current_limit_A = value.get<double>();
    } else if (key == "dt_s") {
      config.dt_s = value.get<double>();
    } else if (key == "feed_force_N") {
      config.feed_force_N = value.get<double>();
    } else if (key == "buoyant_weight_N") {
      config.buoyant_weight_N = value.get<double>();
    } else if (key == "replicates") {
      config.replicates = value.get<int>();
    } else if (key == "noise_rel") {
      config.noise_rel = value.get<double>();
    } else if (key == "seed") {
      config.seed = value.get<std::uint64_t>();
    } else if (key == "alpha") {
      config.alpha = value.get<double>();
    } else if (key == "normalization_scope") {
      const auto scope = sedcore::normalization_scope_from(value.get<std::string>());
      sedcore::require(scope.has_value(), "normalization_scope must be per-table or joint");
      config.scope = *scope;
    } else if (key == "weight_grid_w1") {
      config.weight_grid_w1 = value.get<std::vector<double>>();
    } else if (key == "tie_tolerance") {
      config.tie_tolerance = value.get<double>();
    } else if (key == "platform_constrained") {
      config.platform_constrained = value.get<bool>();
    } else if (key == "output_dir") {
      config.output_dir = value.get<std::string>();
    } else {
      throw sedcore::validation_error("unknown config key '" + key + "'");
    }
  }
  return config;
}

sedcore::TrialConfig trial_config(const RunConfig& config) {
  sedcore::TrialConfig tc;
  tc.target_depth_mm = config.target_depth_mm;
  tc.dt_s = config.dt_s;
  tc.feed.command_N = config.feed_force_N;
  tc.buoyant_weight_N = config.buoyant_weight_N;
  tc.motors.current_limit_A = config.current_limit_A;
  tc.seed = config.seed;
  tc.noise_rel = config.noise_rel;
  return tc;
}

std::vector<sedcore::WeightConfig> weight_grid(const RunConfig& config) {
  sedcore::require(!config.weight_grid_w1.empty(), "weight grid must not be empty");
  std::vector<sedcore::WeightConfig> grid;
  for (double w1 : config.weight_grid_w1) {
    auto w = sedcore::WeightConfig::of(w1);
    w.validate();
    grid.push_back(w);
  }
  return grid;
}

std::vector<sedcore::SedimentSpec> resolve_sediments(const std::vector<std::string>& names) {
  std::vector<std::string> effective = names;
  if (effective.empty() || (effective.size() == 1 && effective[0] == "all"))
    effective = {"coarse_sand", "medium_sand", "silt"};
  std::vector<sedcore::SedimentSpec> sediments;
  for (const std::string& name : effective) {
    const auto preset = sedcore::sediment_preset(name);
    sedcore::require(preset.has_value(), "unknown sediment preset '" + name +
                                             "' (use coarse_sand, medium_sand, silt)");
    sediments.push_back(*preset);
  }
  return sediments;
}

std::vector<std::pair<double, double>> parse_pairs(const std::string& text) {
  std::vector<std::pair<double, double>> pairs;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) {
    const auto slash = token.find('/');
    sedcore::require(slash != std::string::npos, "pair '" + token + "' must look like v/omega");
    const auto v = sedcore::parse_double(token.substr(0, slash));
    const auto w = sedcore::parse_double(token.substr(slash + 1));
    sedcore::require(v.has_value() && w.has_value(), "bad pair '" + token + "'");
    pairs.emplace_back(*v, *w);
  }
  sedcore::require(!pairs.empty(), "no v/omega pairs given");
  return pairs;
}

// ---------------------------------------------------------------------------
// simulate

std::vector<sedcore::PatternSpec> step1_patterns() {
  std::vector<sedcore::PatternSpec> patterns;
  for (double v : {15.0, 22.0, 29.0, 38.0})
    for (double w : {0.0, 3.0, 6.0, 9.0, 12.0})
      patterns.push_back(w == 0.0 ? sedcore::PatternSpec::linear(v)
                                  : sedcore::PatternSpec::helical(v, w));
  return patterns;
}

std::vector<sedcore::PatternSpec> step2_patterns(
    const std::vector<std::pair<double, double>>& pairs) {
  std::vector<sedcore::PatternSpec> patterns;
  for (const auto& [v, w] : pairs) {
    sedcore::require(w > 0.0, "step-2 pairs need omega_r > 0");
    for (double f : {0.0, 10.0, 30.0, 50.0})
      patterns.push_back(f == 0.0 ? sedcore::PatternSpec::helical(v, w)
                                  : sedcore::PatternSpec::zigzag(v, w, f));
  }
  return patterns;
}

// Runs pattern x replicate trials in SRS order; trial ids follow the
// execution order, per-trial seeds follow the unshuffled grid so a pattern's
// replicates are stable against the ordering seed.
std::vector<sedcore::TrialRecord> run_protocol(const std::vector<sedcore::PatternSpec>& patterns,
                                               const sedcore::SedimentSpec& sediment,
                                               const RunConfig& config, int id_base) {
  const sedcore::TrialConfig base = trial_config(config);
  sedcore::CoreGeometry geom = config.geometry;
  const std::size_t n_runs = patterns.size() * static_cast<std::size_t>(config.replicates);
  const std::vector<std::size_t> order = sedcore::srs_order(n_runs, config.seed);

  std::vector<sedcore::TrialRecord> trials;
  trials.reserve(n_runs);
  int next_id = id_base;
  for (std::size_t slot : order) {
    const std::size_t pattern_index = slot / static_cast<std::size_t>(config.replicates);
    sedcore::TrialConfig tc = base;
    tc.seed = sedcore::derive_seed(config.seed, slot);
    sedcore::TrialRecord trial =
        sedcore::simulate_trial(patterns[pattern_index], sediment, geom, tc);
    trial.trial_id = next_id++;
    trials.push_back(std::move(trial));
  }
  return trials;
}

// Step-1 selection: Tukey HSD over per-pattern masses; keep the selected
// patterns' (v, omega) pairs that can rotate.
std::vector<std::pair<double, double>> select_step2_pairs(
    const std::vector<sedcore::TrialRecord>& step1, double alpha) {
  std::map<sedcore::PatternSpec, std::vector<double>> groups;
  for (const auto& trial : step1) groups[trial.pattern].push_back(trial.mass_g);
  std::vector<sedcore::PatternSpec> patterns;
  std::vector<std::vector<double>> masses;
  for (auto& [pattern, values] : groups) {
    patterns.push_back(pattern);
    masses.push_back(values);
  }
  const sedcore::ComparisonOutcome outcome =
      sedcore::multiple_comparison(masses, alpha, /*larger_is_better=*/true);
  std::set<std::pair<double, double>> pairs;
  for (std::size_t index : outcome.selected) {
    const sedcore::PatternSpec& p = patterns[index];
    if (p.omega_rad_s > 0.0) pairs.insert({p.v_mm_s, p.omega_rad_s});
  }
  sedcore::require(!pairs.empty(),
                   "step-1 selection kept no rotating pattern; cannot build a step-2 grid");
  return {pairs.begin(), pairs.end()};
}

int cmd_simulate(const RunConfig& config, const std::vector<std::string>& sediment_names,
                 const std::string& protocol, const std::string& pairs_text,
                 const std::string& out_dir_flag) {
  const auto sediments = resolve_sediments(sediment_names);
  const fs::path out_dir = out_dir_flag.empty() ? fs::path(config.output_dir) : fs::path(out_dir_flag);

  for (const auto& sediment : sediments) {
    std::vector<sedcore::TrialRecord> trials;
    std::vector<sedcore::TrialRecord> step2_trials;
    if (protocol == "step1") {
      trials = run_protocol(step1_patterns(), sediment, config, 1);
    } else if (protocol == "step2") {
      sedcore::require(!pairs_text.empty(), "--pairs is required with --protocol step2");
      trials = run_protocol(step2_patterns(parse_pairs(pairs_text)), sediment, config, 1);
    } else if (protocol == "full") {
      trials = run_protocol(step1_patterns(), sediment, config, 1);
      const auto pairs = select_step2_pairs(trials, config.alpha);
      step2_trials = run_protocol(step2_patterns(pairs), sediment, config,
                                  static_cast<int>(trials.size()) + 1);
    } else {
      throw sedcore::validation_error("unknown protocol '" + protocol +
                                      "' (use step1, step2, full)");
    }

    const fs::path sed_dir = out_dir / sediment.name;
    if (protocol == "full") {
      // Per-step summaries stay balanced designs for the anova subcommand;
      // the combined summary feeds the objectives pipeline.
      std::ostringstream step1_out;
      sedcore::write_summary_csv(step1_out, trials);
      sedcore::write_text_file_atomic(sed_dir / "summary_step1.csv", step1_out.str());
      std::ostringstream step2_out;
      sedcore::write_summary_csv(step2_out, step2_trials);
      sedcore::write_text_file_atomic(sed_dir / "summary_step2.csv", step2_out.str());
      trials.insert(trials.end(), step2_trials.begin(), step2_trials.end());
    }
    {
      std::ostringstream out;
      sedcore::write_summary_csv(out, trials);
      sedcore::write_text_file_atomic(sed_dir / "summary.csv", out.str());
    }
    for (const auto& trial : trials) {
      std::ostringstream out;
      sedcore::write_timeseries_csv(out, trial.samples);
      sedcore::write_text_file_atomic(sed_dir / ("ts_" + std::to_string(trial.trial_id) + ".csv"),
                                      out.str());
    }
    std::cout << sediment.name << ": " << trials.size() << " trials -> "
              << (sed_dir / "summary.csv").string() << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------------------
// objectives / optimize / pareto

std::map<std::string, std::vector<sedcore::TrialRecord>> trials_by_sediment(
    const std::vector<fs::path>& summaries, const RunConfig& config) {
  std::map<std::string, std::vector<sedcore::TrialRecord>> by_sediment;
  for (const fs::path& path : summaries) {
    sedcore::IngestOptions options;
    options.platform_constrained = config.platform_constrained;
    sedcore::IngestResult ingest = sedcore::ingest_summary_csv(path, options);
    if (!ingest.ok()) {
      for (const std::string& err : ingest.errors) std::cerr << "error: " << err << "\n";
      throw sedcore::validation_error("rejected " + std::to_string(ingest.errors.size()) +
                                      " rows while ingesting " + path.string());
    }
    for (auto& trial : ingest.records)
      by_sediment[trial.sediment].push_back(std::move(trial));
  }
  return by_sediment;
}

sedcore::ObjectiveTable apply_current_filter(const sedcore::ObjectiveTable& table,
                                             double current_limit_A) {
  const sedcore::FeasibilityOutcome outcome =
      sedcore::feasibility_filter(table.rows, current_limit_A);
  for (const auto& [row, reason] : outcome.removed)
    std::cout << "dropped " << row.pattern.label() << ": " << reason << "\n";
  if (outcome.unverified_constraint > 0)
    std::cout << outcome.unverified_constraint
              << " rows carry no current log (unverified_constraint); kept\n";
  sedcore::ObjectiveTable filtered = table;
  filtered.rows = outcome.kept;
  return filtered;
}

int cmd_objectives(const RunConfig& config, const std::vector<std::string>& summary_paths,
                   const std::string& out_dir_flag) {
  const fs::path out_dir = out_dir_flag.empty() ? fs::path(config.output_dir) : fs::path(out_dir_flag);
  std::vector<fs::path> paths(summary_paths.begin(), summary_paths.end());
  for (const auto& [sediment, trials] : trials_by_sediment(paths, config)) {
    // Current feasibility is enforced here, while the per-trial logs are
    // still attached; the table CSV schema does not carry currents.
    const sedcore::ObjectiveTable table = apply_current_filter(
        sedcore::build_table(trials, config.geometry, config.target_depth_mm, config.scope),
        config.current_limit_A);
    std::ostringstream out;
    sedcore::write_objective_csv(out, table);
    const fs::path file = out_dir / ("objectives_" + sediment + ".csv");
    sedcore::write_text_file_atomic(file, out.str());
    std::cout << sediment << ": " << table.rows.size() << " patterns -> " << file.string()
              << "\n";
  }
  return 0;
}

sedcore::ObjectiveTable load_and_merge_tables(const std::vector<std::string>& table_paths,
                                              sedcore::NormalizationScope scope) {
  sedcore::require(!table_paths.empty(), "give at least one objective table CSV");
  sedcore::ObjectiveTable merged = sedcore::read_objective_csv_file(table_paths.front());
  for (std::size_t i = 1; i < table_paths.size(); ++i)
    merged = sedcore::merge_tables(merged, sedcore::read_objective_csv_file(table_paths[i]), scope);
  return merged;
}

int cmd_optimize(const RunConfig& config, const std::vector<std::string>& table_paths,
                 const std::string& out_dir_flag, bool with_svg) {
  const fs::path out_dir = out_dir_flag.empty() ? fs::path(config.output_dir) : fs::path(out_dir_flag);
  const sedcore::ObjectiveTable table =
      apply_current_filter(load_and_merge_tables(table_paths, config.scope), config.current_limit_A);
  const auto grid = weight_grid(config);
  const auto sweep = sedcore::sweep_weights(table, grid, config.tie_tolerance);
  {
    std::ostringstream out;
    sedcore::write_sweep_csv(out, sweep);
    sedcore::write_text_file_atomic(out_dir / ("sweep_" + table.sediment + ".csv"), out.str());
  }
  for (const auto& result : sweep)
    std::cout << "w1=" << sedcore::fixed(result.weights.w1, 2) << " -> "
              << result.chosen.label() << " F=" << sedcore::fixed(result.objective_value, 3)
              << (result.ties.empty() ? "" : " (ties recorded)") << "\n";
  if (with_svg) {
    const auto front = sedcore::pareto_front(table);
    sedcore::write_text_file_atomic(
        out_dir / ("chart_" + table.sediment + ".svg"),
        sedcore::render_objective_chart(table, front, sweep, table.sediment));
  }
  return 0;
}

int cmd_pareto(const RunConfig& config, const std::vector<std::string>& table_paths,
               const std::string& out_dir_flag, bool with_svg) {
  const fs::path out_dir = out_dir_flag.empty() ? fs::path(config.output_dir) : fs::path(out_dir_flag);
  const sedcore::ObjectiveTable table =
      apply_current_filter(load_and_merge_tables(table_paths, config.scope), config.current_limit_A);
  const auto front = sedcore::pareto_front(table);
  {
    std::ostringstream out;
    sedcore::write_pareto_csv(out, front);
    sedcore::write_text_file_atomic(out_dir / ("pareto_" + table.sediment + ".csv"), out.str());
  }
  std::cout << table.sediment << ": " << front.size() << " non-dominated patterns\n";
  for (const auto& row : front)
    std::cout << "  " << row.pattern.label() << "  f1=" << sedcore::fixed(*row.f1_norm, 2)
              << " f2=" << sedcore::fixed(*row.f2_norm, 2) << "\n";
  if (with_svg) {
    sedcore::write_text_file_atomic(out_dir / ("chart_" + table.sediment + ".svg"),
                                    sedcore::render_objective_chart(table, front, {}, table.sediment));
  }
  return 0;
}

// ---------------------------------------------------------------------------
// anova

double response_of(const sedcore::TrialRecord& trial, const std::string& response) {
  if (response == "mass") return trial.mass_g;
  if (response == "work") return trial.work_Nmm;
  if (response == "depth") return trial.depth_mm;
  throw sedcore::validation_error("unknown response '" + response +
                                  "' (use mass, work, depth)");
}

int cmd_anova(const RunConfig& config, const std::vector<std::string>& summary_paths,
              const std::string& response, const std::string& factors,
              const std::string& out_dir_flag) {
  const fs::path out_dir = out_dir_flag.empty() ? fs::path(config.output_dir) : fs::path(out_dir_flag);
  std::vector<fs::path> paths(summary_paths.begin(), summary_paths.end());
  const auto by_sediment = trials_by_sediment(paths, config);
  sedcore::require(by_sediment.size() == 1, "anova expects one sediment per run");
  const auto& [sediment, trials] = *by_sediment.begin();

  // Factor levels. v-omega treats feed and spin speed as the two factors
  // (the step-1 design); pair-freq uses the (v, omega) pair and f_r.
  std::map<std::pair<double, double>, std::map<double, std::vector<double>>> grid;
  std::string factor_a, factor_b;
  if (factors == "v-omega") {
    factor_a = "v";
    factor_b = "omega_r";
    for (const auto& trial : trials)
      grid[{trial.pattern.v_mm_s, 0.0}][trial.pattern.omega_rad_s].push_back(
          response_of(trial, response));
  } else if (factors == "pair-freq") {
    factor_a = "v/omega_r";
    factor_b = "f_r";
    for (const auto& trial : trials)
      grid[{trial.pattern.v_mm_s, trial.pattern.omega_rad_s}][trial.pattern.f_r_hz].push_back(
          response_of(trial, response));
  } else {
    throw sedcore::validation_error("unknown factors '" + factors +
                                    "' (use v-omega, pair-freq)");
  }

  std::vector<std::vector<std::vector<double>>> cells;
  for (const auto& [a_level, row] : grid) {
    std::vector<std::vector<double>> cell_row;
    for (const auto& [b_level, values] : row) cell_row.push_back(values);
    cells.push_back(std::move(cell_row));
  }
  const sedcore::AnovaResult result = sedcore::two_way_anova(cells);

  {
    std::ostringstream out;
    sedcore::write_anova_csv(out, result, factor_a, factor_b);
    sedcore::write_text_file_atomic(out_dir / ("anova_" + sediment + ".csv"), out.str());
  }
  std::cout << sediment << " two-way ANOVA on " << response << " (" << factor_a << " x "
            << factor_b << ")\n";
  std::cout << "  " << factor_a << ": F=" << sedcore::fixed(result.f_a, 3)
            << " p=" << sedcore::fixed(result.p_a, 6) << "\n";
  std::cout << "  " << factor_b << ": F=" << sedcore::fixed(result.f_b, 3)
            << " p=" << sedcore::fixed(result.p_b, 6) << "\n";
  std::cout << "  interaction: F=" << sedcore::fixed(result.f_ab, 3)
            << " p=" << sedcore::fixed(result.p_ab, 6) << "\n";

  // Tukey HSD over full patterns on the same response.
  std::map<sedcore::PatternSpec, std::vector<double>> groups;
  for (const auto& trial : trials) groups[trial.pattern].push_back(response_of(trial, response));
  std::vector<std::string> labels;
  std::vector<std::vector<double>> values;
  for (const auto& [pattern, group] : groups) {
    labels.push_back(pattern.label());
    values.push_back(group);
  }
  const sedcore::ComparisonOutcome outcome =
      sedcore::multiple_comparison(values, config.alpha, response == "mass");
  {
    std::ostringstream out;
    sedcore::write_comparison_csv(out, outcome, labels);
    sedcore::write_text_file_atomic(out_dir / ("comparison_" + sediment + ".csv"), out.str());
  }
  std::cout << "Tukey selection, best group plus its statistical ties (alpha="
            << sedcore::fixed(config.alpha, 2) << "): ";
  for (std::size_t i = 0; i < outcome.selected.size(); ++i)
    std::cout << (i ? ", " : "") << labels[outcome.selected[i]];
  std::cout << "\n";
  return 0;
}

// ---------------------------------------------------------------------------
// trajectory / reproduce-paper

int cmd_trajectory(const RunConfig& config, const std::string& kind_text, double v, double omega,
                   double f_r, double duration, double dt, const std::string& out_path) {
  const auto kind = sedcore::pattern_kind_from(kind_text);
  sedcore::require(kind.has_value(), "unknown pattern kind '" + kind_text +
                                         "' (use linear, helical, zigzag)");
  const sedcore::PatternSpec pattern = sedcore::make_pattern(*kind, v, omega, f_r);
  if (config.platform_constrained) pattern.validate(sedcore::PlatformLimits{});
  const auto points = sedcore::trajectory(pattern, config.geometry, duration, dt);
  std::ostringstream out;
  sedcore::write_trajectory_csv(out, points);
  if (out_path.empty() || out_path == "-") {
    std::cout << out.str();
  } else {
    sedcore::write_text_file_atomic(out_path, out.str());
    std::cout << points.size() << " samples -> " << out_path << "\n";
  }
  return 0;
}

int cmd_reproduce(const RunConfig& config, const std::string& fixtures_flag,
                  const std::string& out_dir_flag) {
  const fs::path fixtures = fixtures_flag.empty() ? fs::path("fixtures") : fs::path(fixtures_flag);
  const fs::path out_dir = out_dir_flag.empty() ? fs::path(config.output_dir) : fs::path(out_dir_flag);
  const sedcore::ReproReport report =
      sedcore::reproduce_from_fixtures(fixtures, 0.01, config.tie_tolerance);
  sedcore::write_report_bundle(report, out_dir);
  std::cout << report.diff_text;
  std::cout << "bundle: " << report.files.size() << " files -> " << out_dir.string() << "\n";
  return report.ok() ? 0 : kExitReproductionMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  std::setlocale(LC_ALL, "C");
  CLI::App app{"sediment coring pattern analysis toolkit"};
  app.require_subcommand(1);

  std::string config_path;
  app.add_option("--config", config_path, "JSON run configuration; flags override its keys")
      ->check(CLI::ExistingFile);

  // trajectory
  auto* trajectory = app.add_subcommand("trajectory", "sample a coring trajectory to CSV");
  std::string t_kind = "helical";
  double t_v = 29.0, t_omega = 0.0, t_f = 0.0, t_duration = 5.0, t_dt = 0.01;
  std::string t_out;
  trajectory->add_option("--kind", t_kind, "linear, helical or zigzag");
  trajectory->add_option("--v", t_v, "feed rate, mm/s");
  trajectory->add_option("--omega", t_omega, "angular speed, rad/s");
  trajectory->add_option("--f", t_f, "direction-change frequency, Hz");
  trajectory->add_option("--duration", t_duration, "duration, s");
  trajectory->add_option("--dt", t_dt, "sample step, s");
  trajectory->add_option("--out", t_out, "output CSV ('-' for stdout)");

  // simulate
  auto* simulate = app.add_subcommand("simulate", "run simulated coring trials");
  std::vector<std::string> s_sediments;
  std::string s_protocol = "step1", s_pairs, s_out;
  simulate->add_option("--sediment", s_sediments,
                       "sediment presets (repeatable; default all three)");
  simulate->add_option("--protocol", s_protocol, "step1, step2 or full");
  simulate->add_option("--pairs", s_pairs, "step-2 v/omega pairs, e.g. '38/12,29/12'");
  simulate->add_option("--out-dir", s_out, "output directory");

  // objectives
  auto* objectives = app.add_subcommand("objectives", "build objective tables from summaries");
  std::vector<std::string> o_summaries;
  std::string o_out;
  objectives->add_option("summaries", o_summaries, "trial summary CSVs")->required();
  objectives->add_option("--out-dir", o_out, "output directory");

  // optimize
  auto* optimize = app.add_subcommand("optimize", "weighted-sum sweep over a weight grid");
  std::vector<std::string> opt_tables;
  std::string opt_out;
  bool opt_svg = false;
  optimize->add_option("tables", opt_tables, "objective table CSVs (merged when several)")
      ->required();
  optimize->add_option("--out-dir", opt_out, "output directory");
  optimize->add_flag("--svg", opt_svg, "also emit the chart SVG");

  // pareto
  auto* pareto = app.add_subcommand("pareto", "extract the non-dominated pattern set");
  std::vector<std::string> par_tables;
  std::string par_out;
  bool par_svg = false;
  pareto->add_option("tables", par_tables, "objective table CSVs (merged when several)")
      ->required();
  pareto->add_option("--out-dir", par_out, "output directory");
  pareto->add_flag("--svg", par_svg, "also emit the chart SVG");

  // anova
  auto* anova = app.add_subcommand("anova", "two-way ANOVA and Tukey HSD comparison");
  std::vector<std::string> a_summaries;
  std::string a_response = "mass", a_factors = "v-omega", a_out;
  anova->add_option("summaries", a_summaries, "trial summary CSVs")->required();
  anova->add_option("--response", a_response, "mass, work or depth");
  anova->add_option("--factors", a_factors, "v-omega or pair-freq");
  anova->add_option("--out-dir", a_out, "output directory");

  // reproduce-paper
  auto* reproduce = app.add_subcommand(
      "reproduce-paper", "recompute the published weighted-sum tables from fixtures");
  std::string r_fixtures, r_out;
  reproduce->add_option("--fixtures", r_fixtures, "fixture directory (default ./fixtures)");
  reproduce->add_option("--out-dir", r_out, "output directory");

  // config-overridable scalars available on every subcommand
  std::uint64_t seed_flag = 0;
  double depth_flag = 0.0;
  for (CLI::App* sub : {trajectory, simulate, objectives, optimize, pareto, anova, reproduce}) {
    sub->add_option("--seed", seed_flag, "override the config seed");
    sub->add_option("--target-depth", depth_flag, "override the target depth, mm");
  }

  CLI11_PARSE(app, argc, argv);

  try {
    RunConfig config = load_config(config_path);
    CLI::App* active = app.get_subcommands().front();
    if (active->count("--seed")) config.seed = seed_flag;
    if (active->count("--target-depth")) config.target_depth_mm = depth_flag;
    config.geometry.validate();

    if (active == trajectory)
      return cmd_trajectory(config, t_kind, t_v, t_omega, t_f, t_duration, t_dt, t_out);
    if (active == simulate) return cmd_simulate(config, s_sediments, s_protocol, s_pairs, s_out);
    if (active == objectives) return cmd_objectives(config, o_summaries, o_out);
    if (active == optimize) return cmd_optimize(config, opt_tables, opt_out, opt_svg);
    if (active == pareto) return cmd_pareto(config, par_tables, par_out, par_svg);
    if (active == anova) return cmd_anova(config, a_summaries, a_response, a_factors, a_out);
    if (active == reproduce) return cmd_reproduce(config, r_fixtures, r_out);
    return 1;
  } catch (const sedcore::validation_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
