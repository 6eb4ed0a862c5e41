#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "sedcore/csv.hpp"
#include "sedcore/errors.hpp"
#include "sedcore/objectives.hpp"
#include "sedcore/optimizer.hpp"
#include "sedcore/simulator.hpp"
#include "sedcore/svg.hpp"

using namespace sedcore;
namespace fs = std::filesystem;

namespace {

const char* kSummaryHeader =
    "trial_id,sediment,kind,v_mm_s,omega_rad_s,f_r_hz,mass_g,depth_mm,travel_mm,duration_s,"
    "work_Nmm,terminated_by\n";

std::string valid_rows() {
  return std::string(kSummaryHeader) +
         "1,coarse_sand,linear,38,0,0,120.5,60.2,60.2,1.58,9500.0,stalled\n"
         "2,coarse_sand,helical,38,12,0,480.1,180.0,1450.3,4.73,90000.0,current_limit\n"
         "3,coarse_sand,zigzag,38,12,30,640.2,200.0,1620.7,5.26,91000.0,reached_depth\n";
}

fs::path temp_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("sedcore_test_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

ObjectiveRow norm_row(const PatternSpec& pattern, double f1, double f2) {
  ObjectiveRow row;
  row.pattern = pattern;
  row.f1_norm = f1;
  row.f2_norm = f2;
  row.n_trials = 3;
  return row;
}

}  // namespace

TEST_CASE("ingest accepts a valid summary") {
  std::istringstream in(valid_rows());
  const IngestResult result = ingest_summary(in, "mem.csv");
  CHECK(result.ok());
  REQUIRE(result.records.size() == 3);
  CHECK(result.records[0].pattern.kind == PatternKind::linear);
  CHECK(result.records[2].mass_g == doctest::Approx(640.2));
  CHECK(result.records[2].terminated_by == TrialTermination::reached_depth);
  // No ts_<id>.csv files exist next to an in-memory stream.
  for (const auto& r : result.records) CHECK(r.no_timeseries);
}

TEST_CASE("ingest reports malformed rows with line numbers") {
  const std::string bad = std::string(kSummaryHeader) +
                          "1,coarse_sand,linear,38,0,0,-1,60.2,60.2,1.58,9500.0,stalled\n"
                          "1,coarse_sand,linear,38,0,0,10,60.2,60.2,1.58,9500.0,stalled\n"
                          "7,coarse_sand,wiggle,38,0,0,10,60.2,60.2,1.58,9500.0,stalled\n";
  std::istringstream in(bad);
  const IngestResult result = ingest_summary(in, "bad.csv");
  REQUIRE(result.errors.size() == 3);
  CHECK(result.errors[0].find("line 2") != std::string::npos);
  CHECK(result.errors[0].find("mass_g") != std::string::npos);
  // Line 3 reuses trial id 1: the first row failed validation but the id was
  // already claimed, so the duplicate is reported.
  CHECK(result.errors[1].find("line 3") != std::string::npos);
  CHECK(result.errors[1].find("duplicate") != std::string::npos);
  CHECK(result.errors[2].find("line 4") != std::string::npos);
}

TEST_CASE("ingest enforces platform limits when constrained") {
  const std::string fast = std::string(kSummaryHeader) +
                           "1,silt,linear,45,0,0,10,60.2,60.2,1.58,9500.0,stalled\n";
  std::istringstream in1(fast);
  CHECK_FALSE(ingest_summary(in1, "fast.csv").ok());

  IngestOptions relaxed;
  relaxed.platform_constrained = false;
  std::istringstream in2(fast);
  CHECK(ingest_summary(in2, "fast.csv", relaxed).ok());
}

TEST_CASE("ingest loads time-series files when present") {
  const fs::path dir = temp_dir("ingest_ts");
  {
    std::ofstream summary(dir / "summary.csv");
    summary << valid_rows();
  }
  {
    std::ofstream ts(dir / "ts_1.csv");
    ts << "t_s,z_mm,theta_rad,force_N,current1_A,current2_A\n"
          "0.000000,0.000000,0.000000,50.000000,0.500000,0.150000\n"
          "0.001000,-0.038000,0.000000,49.900000,0.510000,0.150000\n";
  }
  const IngestResult result = ingest_summary_csv(dir / "summary.csv");
  CHECK(result.ok());
  REQUIRE(result.records.size() == 3);
  CHECK_FALSE(result.records[0].no_timeseries);
  CHECK(result.records[0].samples.size() == 2);
  CHECK(*result.records[0].max_current1_A == doctest::Approx(0.51));
  // Rows 2 and 3 have no time-series sidecar and keep the flag.
  CHECK(result.records[1].no_timeseries);
  CHECK(result.records[2].no_timeseries);
}

TEST_CASE("summary CSV round trip preserves printed precision") {
  TrialConfig config;
  const auto trials = simulate_replicates(PatternSpec::zigzag(38, 12, 30), coarse_sand_preset(),
                                          CoreGeometry{}, config, 2);
  std::ostringstream out;
  write_summary_csv(out, trials);
  std::istringstream in(out.str());
  const IngestResult result = ingest_summary(in, "roundtrip.csv");
  REQUIRE(result.ok());
  REQUIRE(result.records.size() == trials.size());
  for (std::size_t i = 0; i < trials.size(); ++i) {
    CHECK(result.records[i].pattern == trials[i].pattern);
    CHECK(result.records[i].mass_g == doctest::Approx(trials[i].mass_g).epsilon(1e-4));
    CHECK(result.records[i].work_Nmm == doctest::Approx(trials[i].work_Nmm).epsilon(1e-4));
    CHECK(result.records[i].terminated_by == trials[i].terminated_by);
  }
}

TEST_CASE("empty work field falls back to the excluded sentinel downstream") {
  const std::string no_work = std::string(kSummaryHeader) +
                              "1,silt,linear,29,0,0,150,200,200,6.9,,stalled\n"
                              "2,silt,helical,29,12,0,430,200,1300,6.9,95000,reached_depth\n";
  std::istringstream in(no_work);
  const IngestResult result = ingest_summary(in, "nowork.csv");
  REQUIRE(result.ok());
  CHECK(result.records[0].work_Nmm == 0.0);
  CHECK(result.records[0].no_timeseries);

  // Without work data the row cannot produce f2 and ends up excluded.
  const ObjectiveTable table = build_table(result.records, CoreGeometry{}, 200.0);
  for (const ObjectiveRow& row : table.rows) {
    if (row.pattern == result.records[0].pattern) {
      CHECK(row.excluded);
      CHECK_FALSE(row.f2_norm.has_value());
    } else {
      CHECK_FALSE(row.excluded);
    }
  }
}

TEST_CASE("SVG chart is deterministic and rejects an empty front") {
  const ObjectiveTable table = {"synthetic",
                                {norm_row(PatternSpec::zigzag(38, 12, 10), 2.07, 1.00),
                                 norm_row(PatternSpec::zigzag(38, 12, 30), 1.87, 1.05),
                                 norm_row(PatternSpec::linear(38), 4.67, 1.11)},
                                NormalizationScope::per_table,
                                false};
  const auto front = pareto_front(table);
  const auto sweep = sweep_weights(table, default_weight_grid());

  const std::string a = render_objective_chart(table, front, sweep, "synthetic");
  const std::string b = render_objective_chart(table, front, sweep, "synthetic");
  CHECK(a == b);
  CHECK(a.find("<svg") != std::string::npos);
  CHECK(a.find("polyline") != std::string::npos);

  CHECK_THROWS_AS(render_objective_chart(table, {}, sweep, "synthetic"), validation_error);
}

TEST_CASE("front polyline lists vertices in ascending f1 order") {
  const ObjectiveTable table = {"synthetic",
                                {norm_row(PatternSpec::linear(38), 5.0, 1.0),
                                 norm_row(PatternSpec::helical(29, 12), 3.0, 2.0),
                                 norm_row(PatternSpec::zigzag(29, 12, 30), 1.0, 4.0)},
                                NormalizationScope::per_table,
                                false};
  const auto front = pareto_front(table);
  REQUIRE(front.size() == 3);
  const std::string svg = render_objective_chart(table, front, {}, "three");

  const auto points_at = svg.find("points=\"");
  REQUIRE(points_at != std::string::npos);
  const auto end = svg.find('"', points_at + 8);
  const std::string points = svg.substr(points_at + 8, end - points_at - 8);
  // Three x,y vertices separated by spaces, x strictly increasing.
  std::istringstream tokens(points);
  std::string vertex;
  double prev_x = -1.0;
  int count = 0;
  while (tokens >> vertex) {
    ++count;
    const double x = std::stod(vertex.substr(0, vertex.find(',')));
    CHECK(x > prev_x);
    prev_x = x;
  }
  CHECK(count == 3);
}

TEST_CASE("atomic text writes replace the target in one step") {
  const fs::path dir = temp_dir("atomic");
  const fs::path file = dir / "out.txt";
  write_text_file_atomic(file, "first\n");
  write_text_file_atomic(file, "second\n");
  CHECK(read_text_file(file) == "second\n");
  CHECK_FALSE(fs::exists(file.string() + ".tmp"));
}

TEST_CASE("fixed formatting is plain and locale-proof") {
  CHECK(fixed(1.5, 3) == "1.500");
  CHECK(fixed(-0.25, 2) == "-0.25");
  CHECK(fixed(1234.56789, 4) == "1234.5679");
}
