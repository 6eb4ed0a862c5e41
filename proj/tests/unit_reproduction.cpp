#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "sedcore/errors.hpp"
#include "sedcore/reproduction.hpp"

using namespace sedcore;
namespace fs = std::filesystem;

namespace {

fs::path copy_fixtures(const std::string& tag) {
  const fs::path src(SEDCORE_FIXTURE_DIR);
  const fs::path dst = fs::temp_directory_path() / ("sedcore_fixtures_" + tag);
  fs::remove_all(dst);
  fs::create_directories(dst);
  for (const auto& entry : fs::directory_iterator(src)) fs::copy(entry.path(), dst);
  return dst;
}

}  // namespace

TEST_CASE("embedded expectations cover the nine-weight grid per sediment") {
  for (const std::string_view sediment : kReproductionSediments) {
    const auto rows = table6_expected(sediment);
    REQUIRE(rows.size() == 9);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      CHECK(rows[i].w1 == doctest::Approx(0.1 * static_cast<double>(i + 1)));
      CHECK(rows[i].f1 >= 1.0);
      CHECK(rows[i].f2 >= 1.0);
    }
  }
  CHECK_THROWS_AS(table6_expected("clay"), validation_error);
}

TEST_CASE("reproduction from the shipped fixtures is clean") {
  const ReproReport report = reproduce_from_fixtures(SEDCORE_FIXTURE_DIR);
  CHECK(report.ok());
  CHECK(report.selection_matches == 27);
  CHECK(report.mismatches == 0);
  // 3 sediments x (sweep, pareto, union, chart) + combined sweep + diff.
  CHECK(report.files.size() == 14);
  const auto& sweep = report.files.at("sweep_coarse.csv");
  CHECK(std::count(sweep.begin(), sweep.end(), '\n') == 10);  // header + 9 weights

  // The combined report carries all 27 selections; the medium-sand
  // mass-oriented row scalarizes to exactly 1.239.
  const auto& all = report.files.at("sweep_all.csv");
  long data_rows = 0;
  std::istringstream lines(all);
  for (std::string line; std::getline(lines, line);)
    if (!line.empty() && line[0] != '#' && line[0] != 'w') ++data_rows;
  CHECK(data_rows == 27);
  CHECK(report.files.at("sweep_medium.csv").find("0.900,0.100,1.00,3.39,1.239") !=
        std::string::npos);
}

TEST_CASE("a tampered fixture value is flagged and fails the reproduction") {
  const fs::path dir = copy_fixtures("tamper");
  // Bump the winning coarse-sand f1 cell (zigzag 38/12/30: 1.87 -> 2.87).
  const fs::path target = dir / "table5_coarse.csv";
  std::string text;
  {
    std::ifstream in(target);
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  const std::string needle = "coarse_sand,zigzag,38.000,12.000,30.000,,,1.87,1.05,false,3";
  const auto at = text.find(needle);
  REQUIRE(at != std::string::npos);
  text.replace(at, needle.size(), "coarse_sand,zigzag,38.000,12.000,30.000,,,2.87,1.05,false,3");
  {
    std::ofstream out(target, std::ios::trunc);
    out << text;
  }

  const ReproReport report = reproduce_from_fixtures(dir);
  CHECK_FALSE(report.ok());
  CHECK(report.mismatches > 0);
  CHECK(report.diff_text.find("MISMATCH") != std::string::npos);
  fs::remove_all(dir);
}

TEST_CASE("missing fixtures are reported as such") {
  const fs::path dir = copy_fixtures("missing");
  fs::remove(dir / "table4_silt.csv");
  CHECK_THROWS_WITH_AS(reproduce_from_fixtures(dir),
                       doctest::Contains("missing fixture"), validation_error);
  fs::remove_all(dir);
}
