#include "sedcore/reproduction.hpp"

#include <cmath>
#include <sstream>

#include "sedcore/csv.hpp"
#include "sedcore/errors.hpp"

namespace sedcore {

namespace {

PatternSpec p1(double v) { return PatternSpec::linear(v); }
PatternSpec p2(double v, double w) { return PatternSpec::helical(v, w); }
PatternSpec p3(double v, double w, double f) { return PatternSpec::zigzag(v, w, f); }

const std::array<Table6Row, 9> kCoarse = {{
    {0.1, 2.07, 1.00, 1.107, p3(38, 12, 10)},
    {0.2, 1.87, 1.05, 1.211, p3(38, 12, 30)},
    {0.3, 1.87, 1.05, 1.293, p3(38, 12, 30)},
    {0.4, 1.87, 1.05, 1.375, p3(38, 12, 30)},
    {0.5, 1.87, 1.05, 1.457, p3(38, 12, 30)},
    {0.6, 1.87, 1.05, 1.539, p3(38, 12, 30)},
    {0.7, 1.87, 1.05, 1.621, p3(38, 12, 30)},
    {0.8, 1.87, 1.05, 1.703, p3(38, 12, 30)},
    {0.9, 1.87, 1.05, 1.785, p3(38, 12, 30)},
}};

const std::array<Table6Row, 9> kMedium = {{
    {0.1, 1.41, 1.00, 1.041, p2(29, 12)},
    {0.2, 1.41, 1.00, 1.082, p2(29, 12)},
    {0.3, 1.41, 1.00, 1.123, p2(29, 12)},
    {0.4, 1.41, 1.00, 1.164, p2(29, 12)},
    {0.5, 1.41, 1.00, 1.205, p2(29, 12)},
    {0.6, 1.41, 1.00, 1.246, p2(29, 12)},
    {0.7, 1.41, 1.00, 1.287, p2(29, 12)},
    {0.8, 1.41, 1.00, 1.328, p2(29, 12)},
    {0.9, 1.00, 3.39, 1.239, p3(29, 12, 30)},
}};

const std::array<Table6Row, 9> kSilt = {{
    {0.1, 4.41, 1.00, 1.341, p1(29)},
    {0.2, 4.41, 1.00, 1.682, p1(29)},
    {0.3, 4.41, 1.00, 2.023, p1(29)},
    {0.4, 2.70, 1.75, 2.132, p3(29, 3, 50)},
    {0.5, 2.58, 1.85, 2.217, p3(29, 3, 30)},
    {0.6, 2.58, 1.85, 2.290, p3(29, 3, 30)},
    {0.7, 1.73, 3.57, 2.282, p3(29, 12, 10)},
    {0.8, 1.73, 3.57, 2.098, p3(29, 12, 10)},
    {0.9, 1.00, 7.97, 1.697, p3(15, 6, 10)},
}};

std::string fixture_suffix(std::string_view sediment) {
  if (sediment == "coarse_sand" || sediment == "coarse") return "coarse";
  if (sediment == "medium_sand" || sediment == "medium") return "medium";
  if (sediment == "silt") return "silt";
  throw validation_error("unknown reproduction sediment '" + std::string(sediment) + "'");
}

const ObjectiveRow* find_row(const ObjectiveTable& table, const PatternSpec& pattern) {
  for (const ObjectiveRow& row : table.rows)
    if (row.pattern == pattern) return &row;
  return nullptr;
}

}  // namespace

std::span<const Table6Row> table6_expected(std::string_view sediment) {
  const std::string suffix = fixture_suffix(sediment);
  if (suffix == "coarse") return kCoarse;
  if (suffix == "medium") return kMedium;
  return kSilt;
}

ReproReport reproduce_from_fixtures(const std::filesystem::path& fixture_dir, double value_tol,
                                    double tie_tol) {
  ReproReport report;
  std::ostringstream diff;
  std::ostringstream combined_sweep;
  bool combined_header_done = false;
  diff << "weighted-sum reproduction against the published expectations\n";
  diff << "tolerances: value " << fixed(value_tol, 3) << ", tie " << fixed(tie_tol, 3) << "\n";

  for (std::string_view sediment : kReproductionSediments) {
    const std::string suffix = fixture_suffix(sediment);
    const auto step1_path = fixture_dir / ("table4_" + suffix + ".csv");
    const auto step2_path = fixture_dir / ("table5_" + suffix + ".csv");
    require(std::filesystem::exists(step1_path), "missing fixture " + step1_path.string());
    require(std::filesystem::exists(step2_path), "missing fixture " + step2_path.string());

    SedimentReproduction repro;
    repro.sediment = std::string(sediment);
    const ObjectiveTable step1 = read_objective_csv_file(step1_path);
    const ObjectiveTable step2 = read_objective_csv_file(step2_path);
    repro.union_table = merge_tables(step1, step2, NormalizationScope::per_table);

    const std::vector<WeightConfig> grid = default_weight_grid();
    repro.sweep = sweep_weights(repro.union_table, grid, tie_tol);
    repro.front = pareto_front(repro.union_table);

    const std::span<const Table6Row> expected = table6_expected(sediment);
    diff << "\n[" << sediment << "] front size " << repro.front.size() << "\n";
    for (std::size_t i = 0; i < expected.size(); ++i) {
      RowDiff row;
      row.expected = expected[i];
      row.computed = repro.sweep[i];
      const WeightConfig w = grid[i];
      row.arithmetic_gap =
          std::abs(w.w1 * row.expected.f1 + w.w2 * row.expected.f2 - row.expected.objective_value);

      std::ostringstream note;
      if (row.arithmetic_gap > value_tol) {
        row.verdict = RowVerdict::mismatch;
        note << "printed arithmetic off by " << fixed(row.arithmetic_gap, 4) << "; ";
      }
      if (row.computed.chosen == row.expected.pattern) {
        if (std::abs(row.computed.f1_norm - row.expected.f1) > 0.005 + 1e-9 ||
            std::abs(row.computed.f2_norm - row.expected.f2) > 0.005 + 1e-9) {
          row.verdict = RowVerdict::mismatch;
          note << "fixture objectives (" << fixed(row.computed.f1_norm, 2) << ", "
               << fixed(row.computed.f2_norm, 2) << ") differ from printed ("
               << fixed(row.expected.f1, 2) << ", " << fixed(row.expected.f2, 2) << "); ";
        }
      } else {
        const ObjectiveRow* printed_row = find_row(repro.union_table, row.expected.pattern);
        const bool tie = printed_row != nullptr && !printed_row->excluded &&
                         std::abs(weighted_sum_value(*printed_row, w) -
                                  row.computed.objective_value) <= tie_tol;
        if (tie && row.verdict != RowVerdict::mismatch) {
          row.verdict = RowVerdict::tie;
          note << "tie within " << fixed(tie_tol, 3) << ": chose "
               << row.computed.chosen.label() << " over printed "
               << row.expected.pattern.label() << "; ";
        } else {
          row.verdict = RowVerdict::mismatch;
          note << "selected " << row.computed.chosen.label() << " but printed "
               << row.expected.pattern.label() << "; ";
        }
      }
      row.note = note.str();

      const char* tag = row.verdict == RowVerdict::match
                            ? "ok      "
                            : (row.verdict == RowVerdict::tie ? "tie     " : "MISMATCH");
      diff << "  w1=" << fixed(w.w1, 1) << "  " << tag << "  printed "
           << row.expected.pattern.label() << " F=" << fixed(row.expected.objective_value, 3)
           << "  computed " << row.computed.chosen.label() << " F="
           << fixed(row.computed.objective_value, 3);
      if (!row.note.empty()) diff << "  [" << row.note << "]";
      diff << "\n";

      if (row.verdict == RowVerdict::match) ++repro.selection_matches;
      if (row.verdict == RowVerdict::tie) ++repro.tie_misses;
      if (row.verdict == RowVerdict::mismatch) ++repro.mismatches;
    }

    report.selection_matches += repro.selection_matches;
    report.tie_misses += repro.tie_misses;
    report.mismatches += repro.mismatches;

    {
      std::ostringstream out;
      write_sweep_csv(out, repro.sweep);
      report.files["sweep_" + suffix + ".csv"] = out.str();
      // All 27 rows in one report, blocks separated by sediment comments.
      const std::string block = out.str();
      const auto body = block.find('\n');
      if (!combined_header_done) {
        combined_sweep << block.substr(0, body + 1);
        combined_header_done = true;
      }
      combined_sweep << "# " << sediment << "\n" << block.substr(body + 1);
    }
    {
      std::ostringstream out;
      write_pareto_csv(out, repro.front);
      report.files["pareto_" + suffix + ".csv"] = out.str();
    }
    {
      std::ostringstream out;
      write_objective_csv(out, repro.union_table);
      report.files["union_" + suffix + ".csv"] = out.str();
    }
    report.files["chart_" + suffix + ".svg"] = render_objective_chart(
        repro.union_table, repro.front, repro.sweep, std::string(sediment));

    report.sediments.push_back(std::move(repro));
  }

  diff << "\nsummary: " << report.selection_matches << " selections match, "
       << report.tie_misses << " tie-resolved, " << report.mismatches
       << " beyond tolerance\n";
  report.diff_text = diff.str();
  report.files["sweep_all.csv"] = combined_sweep.str();
  report.files["table6_diff.txt"] = report.diff_text;
  return report;
}

void write_report_bundle(const ReproReport& report, const std::filesystem::path& out_dir) {
  for (const auto& [name, content] : report.files)
    write_text_file_atomic(out_dir / name, content);
}

}  // namespace sedcore
