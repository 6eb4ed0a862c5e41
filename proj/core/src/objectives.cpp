#include "sedcore/objectives.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <ostream>
#include <set>

#include "sedcore/csv.hpp"
#include "sedcore/errors.hpp"

namespace sedcore {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::string opt_field(const std::optional<double>& v, int decimals) {
  return v.has_value() ? fixed(*v, decimals) : std::string{};
}

}  // namespace

std::string_view to_string(NormalizationScope scope) {
  return scope == NormalizationScope::per_table ? "per-table" : "joint";
}

std::optional<NormalizationScope> normalization_scope_from(std::string_view text) {
  if (text == "per-table" || text == "per_table") return NormalizationScope::per_table;
  if (text == "joint") return NormalizationScope::joint;
  return std::nullopt;
}

double desired_volume_cm3(const CoreGeometry& geom, double target_depth_mm) {
  geom.validate();
  require_finite(target_depth_mm, "target depth");
  require(target_depth_mm > 0.0, "target depth must be > 0");
  const double ri = geom.inner_radius_mm();
  return kPi * ri * ri * target_depth_mm / 1000.0;
}

std::optional<double> objective_f1(double mass_g, double desired_volume_cm3) {
  require_finite(mass_g, "mass");
  require_finite(desired_volume_cm3, "desired volume");
  require(mass_g >= 0.0, "mass must be >= 0");
  require(desired_volume_cm3 > 0.0, "desired volume must be > 0");
  if (mass_g == 0.0) return std::nullopt;
  return desired_volume_cm3 / mass_g;
}

std::optional<double> objective_f2(double work_Nmm, double duration_s) {
  require_finite(work_Nmm, "work");
  require_finite(duration_s, "duration");
  require(work_Nmm >= 0.0, "work must be >= 0");
  require(duration_s > 0.0, "duration must be > 0");
  if (work_Nmm == 0.0) return std::nullopt;
  return duration_s / work_Nmm;
}

NormalizeResult normalize_to_band(std::span<const std::optional<double>> values) {
  require(!values.empty(), "normalize needs at least one value");
  double lo = 0.0, hi = 0.0;
  std::size_t n = 0;
  for (const auto& v : values) {
    if (!v.has_value()) continue;
    require_finite(*v, "normalization input");
    if (n == 0) {
      lo = hi = *v;
    } else {
      lo = std::min(lo, *v);
      hi = std::max(hi, *v);
    }
    ++n;
  }
  require(n >= 1, "normalize needs at least one non-excluded value");

  NormalizeResult out;
  out.values.resize(values.size());
  out.degenerate = hi == lo;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!values[i].has_value()) continue;
    out.values[i] = out.degenerate ? 1.0 : 1.0 + 9.0 * (*values[i] - lo) / (hi - lo);
  }
  return out;
}

namespace {

void normalize_rows(ObjectiveTable& table) {
  std::vector<std::optional<double>> f1, f2;
  f1.reserve(table.rows.size());
  f2.reserve(table.rows.size());
  for (const ObjectiveRow& row : table.rows) {
    f1.push_back(row.excluded ? std::nullopt : row.f1_raw);
    f2.push_back(row.excluded ? std::nullopt : row.f2_raw);
  }
  const NormalizeResult n1 = normalize_to_band(f1);
  const NormalizeResult n2 = normalize_to_band(f2);
  table.degenerate_normalization = n1.degenerate || n2.degenerate;
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    table.rows[i].f1_norm = n1.values[i];
    table.rows[i].f2_norm = n2.values[i];
  }
}

}  // namespace

ObjectiveTable build_table(std::span<const TrialRecord> trials, const CoreGeometry& geom,
                           double target_depth_mm, NormalizationScope scope) {
  require(!trials.empty(), "objective table needs at least one trial");
  const double volume = desired_volume_cm3(geom, target_depth_mm);

  std::map<PatternSpec, std::vector<const TrialRecord*>> groups;
  const std::string& sediment = trials.front().sediment;
  for (const TrialRecord& trial : trials) {
    require(trial.sediment == sediment, "mixed sediments in one objective table");
    groups[trial.pattern].push_back(&trial);
  }

  ObjectiveTable table;
  table.sediment = sediment;
  table.scope = scope;
  for (const auto& [pattern, members] : groups) {
    double mass = 0.0, work = 0.0, duration = 0.0;
    double c1 = 0.0, c2 = 0.0;
    bool currents_known = true;
    for (const TrialRecord* t : members) {
      mass += t->mass_g;
      work += t->work_Nmm;
      duration += t->duration_s;
      if (t->max_current1_A && t->max_current2_A) {
        c1 = std::max(c1, *t->max_current1_A);
        c2 = std::max(c2, *t->max_current2_A);
      } else {
        currents_known = false;
      }
    }
    const double n = static_cast<double>(members.size());
    mass /= n;
    work /= n;
    duration /= n;

    ObjectiveRow row;
    row.pattern = pattern;
    row.n_trials = static_cast<int>(members.size());
    row.f1_raw = objective_f1(mass, volume);
    row.f2_raw = duration > 0.0 ? objective_f2(work, duration) : std::nullopt;
    row.excluded = !row.f1_raw.has_value() || !row.f2_raw.has_value();
    if (currents_known) {
      row.max_current1_A = c1;
      row.max_current2_A = c2;
    }
    table.rows.push_back(std::move(row));
  }

  bool any_usable = false;
  for (const ObjectiveRow& row : table.rows) any_usable |= !row.excluded;
  require(any_usable, "every pattern group was excluded (no sample collected)");

  normalize_rows(table);
  return table;
}

ObjectiveTable merge_tables(const ObjectiveTable& a, const ObjectiveTable& b,
                            NormalizationScope scope) {
  require(a.sediment == b.sediment, "cannot merge tables of different sediments");

  ObjectiveTable merged;
  merged.sediment = a.sediment;
  merged.scope = scope;
  std::map<PatternSpec, ObjectiveRow> by_pattern;
  const auto add = [&](const ObjectiveRow& row) {
    auto [it, inserted] = by_pattern.emplace(row.pattern, row);
    if (inserted) return;
    const ObjectiveRow& kept = it->second;
    const auto close = [](const std::optional<double>& x, const std::optional<double>& y) {
      if (x.has_value() != y.has_value()) return false;
      return !x.has_value() || std::abs(*x - *y) <= 1e-9;
    };
    require(kept.excluded == row.excluded && close(kept.f1_norm, row.f1_norm) &&
                close(kept.f2_norm, row.f2_norm),
            "duplicate pattern " + row.pattern.label() + " disagrees between merged tables");
  };
  for (const ObjectiveRow& row : a.rows) add(row);
  for (const ObjectiveRow& row : b.rows) add(row);

  for (auto& [pattern, row] : by_pattern) merged.rows.push_back(std::move(row));

  if (scope == NormalizationScope::joint) {
    for (const ObjectiveRow& row : merged.rows)
      require(row.excluded || (row.f1_raw && row.f2_raw),
              "joint renormalization needs raw objective values on every row");
    normalize_rows(merged);
  }
  return merged;
}

void write_objective_csv(std::ostream& out, const ObjectiveTable& table) {
  out << "# normalization: affine min-max onto [1,10] per objective, scope "
      << to_string(table.scope) << "; replicates reduced by arithmetic mean\n";
  out << "sediment,kind,v_mm_s,omega_rad_s,f_r_hz,f1_raw,f2_raw,f1_norm,f2_norm,excluded,"
         "n_trials\n";
  for (const ObjectiveRow& row : table.rows) {
    out << table.sediment << ',' << to_string(row.pattern.kind) << ','
        << fixed(row.pattern.v_mm_s, 3) << ',' << fixed(row.pattern.omega_rad_s, 3) << ','
        << fixed(row.pattern.f_r_hz, 3) << ',' << opt_field(row.f1_raw, 6) << ','
        << opt_field(row.f2_raw, 6) << ',' << opt_field(row.f1_norm, 4) << ','
        << opt_field(row.f2_norm, 4) << ',' << (row.excluded ? "true" : "false") << ','
        << row.n_trials << '\n';
  }
}

ObjectiveTable read_objective_csv(std::istream& in, const std::string& source_name) {
  const CsvContent csv = read_csv(in, source_name);
  const std::vector<std::string> expected = {"sediment", "kind",    "v_mm_s",  "omega_rad_s",
                                             "f_r_hz",   "f1_raw",  "f2_raw",  "f1_norm",
                                             "f2_norm",  "excluded", "n_trials"};
  require(csv.header == expected, source_name + ": unexpected objective table header");
  require(!csv.rows.empty(), source_name + ": empty objective table");

  ObjectiveTable table;
  std::set<PatternSpec> seen;
  for (const CsvRow& row : csv.rows) {
    const std::string where = source_name + " line " + std::to_string(row.line_no);
    require(row.fields.size() == expected.size(), where + ": wrong field count");
    if (table.sediment.empty()) table.sediment = row.fields[0];
    require(row.fields[0] == table.sediment, where + ": mixed sediments in one table");

    const auto kind = pattern_kind_from(row.fields[1]);
    const auto v = parse_double(row.fields[2]);
    const auto omega = parse_double(row.fields[3]);
    const auto f_r = parse_double(row.fields[4]);
    require(kind && v && omega && f_r, where + ": bad pattern columns");

    ObjectiveRow out;
    out.pattern = make_pattern(*kind, *v, *omega, *f_r, ZigzagZeroFrequency::treat_as_helical);
    require(seen.insert(out.pattern).second,
            where + ": duplicate pattern " + out.pattern.label());
    out.f1_raw = parse_double(row.fields[5]);
    out.f2_raw = parse_double(row.fields[6]);
    out.f1_norm = parse_double(row.fields[7]);
    out.f2_norm = parse_double(row.fields[8]);
    if (row.fields[9] == "true") {
      out.excluded = true;
    } else if (row.fields[9] == "false") {
      out.excluded = false;
    } else {
      throw validation_error(where + ": excluded must be true or false");
    }
    const auto n = parse_long(row.fields[10]);
    require(n.has_value() && *n >= 0, where + ": bad n_trials");
    out.n_trials = static_cast<int>(*n);
    if (!out.excluded) {
      require(out.f1_norm && out.f2_norm, where + ": non-excluded row needs normalized values");
      require(*out.f1_norm >= 1.0 - 1e-9 && *out.f1_norm <= 10.0 + 1e-9 &&
                  *out.f2_norm >= 1.0 - 1e-9 && *out.f2_norm <= 10.0 + 1e-9,
              where + ": normalized values must lie in [1, 10]");
    }
    table.rows.push_back(std::move(out));
  }
  return table;
}

ObjectiveTable read_objective_csv_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  require(in.good(), "cannot open " + path.string());
  return read_objective_csv(in, path.string());
}

}  // namespace sedcore
