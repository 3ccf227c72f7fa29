#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "colorloss/coeffs.hpp"
#include "colorloss/montecarlo.hpp"
#include "colorloss/percolation.hpp"
#include "colorloss/protocol.hpp"
#include "json.hpp"

namespace cli {

using namespace colorloss;

namespace {

std::vector<Geometry> geometries_of(const std::vector<std::string>& names) {
  std::vector<Geometry> out;
  for (const auto& n : names) {
    if (n == "all") {
      out.assign(kGeometries.begin(), kGeometries.end());
      return out;
    }
    const Geometry g = parse_geometry(n);
    if (std::find(out.begin(), out.end(), g) == out.end()) out.push_back(g);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Color> colors_of(const std::vector<std::string>& names) {
  std::vector<Color> out;
  for (const auto& n : names) {
    if (n == "all") {
      out.assign(kColors.begin(), kColors.end());
      return out;
    }
    const Color c = parse_color(n);
    if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

template <typename T, typename F>
std::string join(const std::vector<T>& v, F f) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + f(v[i]);
  return s;
}

std::string join_geometries(const std::vector<Geometry>& v) {
  return join(v, [](Geometry g) { return std::string(to_string(g)); });
}

std::string join_colors(const std::vector<Color>& v) {
  return join(v, [](Color c) { return std::string(to_string(c)); });
}

std::string join_ints(const std::vector<int>& v) {
  return join(v, [](int x) { return std::to_string(x); });
}

std::string tag(const std::vector<Geometry>& gs) {
  if (gs.size() == 1) {
    std::string s(to_string(gs[0]));
    s.erase(std::remove(s.begin(), s.end(), '.'), s.end());
    return s;
  }
  return "all";
}

Cell frac(const Rational& q) { return to_fraction_string(q); }
Cell str(std::string_view s) { return std::string(s); }
Cell num(std::int64_t x) { return x; }

PfRemoval parse_removal(const std::string& s) {
  if (s == "lost-and-sacrificed") return PfRemoval::LostAndSacrificed;
  if (s == "lost-only") return PfRemoval::LostOnly;
  throw UsageError("unknown removal '" + s + "' (expected lost-and-sacrificed or lost-only)");
}

void require_positive(std::size_t samples) {
  if (samples == 0) throw UsageError("--samples must be positive");
}

}  // namespace

// ---------------------------------------------------------------- lattice

int cmd_lattice(const LatticeOptions& o, const Common& common) {
  RunConfig config{"lattice", {}};
  ColorCodeLattice lattice = [&] {
    if (!o.input.empty()) {
      std::ifstream in(o.input);
      if (!in) throw UsageError("cannot read " + o.input);
      std::stringstream buf;
      buf << in.rdbuf();
      config.set("input", o.input);
      return lattice_from_json(buf.str());
    }
    const Geometry g = parse_geometry(o.geometry);
    config.set("geometry", std::string(to_string(g)));
    config.set("size", std::to_string(o.L));
    return ColorCodeLattice::build(g, o.L);
  }();
  config.set("indent", std::to_string(o.indent));

  const ValidationReport report = validate(lattice);
  nlohmann::ordered_json doc = nlohmann::ordered_json::parse(lattice_to_json(lattice));
  nlohmann::ordered_json violations = nlohmann::ordered_json::array();
  for (const auto& v : report.violations) {
    violations.push_back({{"kind", v.kind}, {"message", v.message}, {"ids", v.ids}});
  }
  doc["validation"] = {{"ok", report.ok()}, {"violations", violations}};
  doc["generator"] = {{"version", COLORLOSS_VERSION_STRING}, {"command", config.command_line()}};
  emit_text(common.dest, "lattice-" + std::string(to_string(lattice.geometry())) + "-L" +
                             std::to_string(lattice.size()) + ".json",
            doc.dump(o.indent) + "\n");

  std::cerr << to_string(lattice.geometry()) << " L=" << lattice.size() << ": "
            << lattice.num_alive_qubits() << " qubits, " << lattice.num_alive_edges() << " edges, "
            << lattice.faces().size() << " faces, " << (report.ok() ? "valid" : "INVALID") << "\n";
  for (const auto& v : report.violations) std::cerr << "  " << v.kind << ": " << v.message << "\n";
  return report.ok() ? 0 : 3;
}

// ---------------------------------------------------------------- coeffs

int cmd_coeffs(const CoeffsOptions& o, const Common& common) {
  const auto gs = geometries_of(o.geometries);
  const auto cs = colors_of(o.colors);
  if (o.lmax < 1 || o.lmax > 4) throw UsageError("--lmax must lie in 1..4");
  const Format format = parse_format(common.format);

  RunConfig config{"coeffs", {}};
  config.set("geometry", join_geometries(gs));
  config.set("color", join_colors(cs));
  config.set("lmax", std::to_string(o.lmax));
  if (o.L > 0) config.set("size", std::to_string(o.L));
  config.set("center", std::to_string(o.center));
  config.set("extra-radius", std::to_string(o.extra_radius));
  if (o.no_prefilter) config.set("no-prefilter", "");
  if (o.instances) config.set("instances", "");
  config.set("format", common.format);

  Table table;
  if (o.instances) {
    table.kind = "instances";
    table.columns = {"geometry", "color", "L", "size", "qubits", "R", "E", "E_scaled", "scale"};
    table.notes.push_back("fully interacting loss instances containing the center qubit");
    table.notes.push_back("E_scaled = E * size! * 3^size, an integer");
  } else {
    table.kind = "coefficients";
    table.columns = {"geometry", "color", "L", "ell", "I", "R_mean", "E_mean", "alpha"};
    table.notes.push_back("r(p) = sum_ell alpha_ell p^ell; fractions are exact");
  }

  for (Geometry g : gs) {
    const int L = o.L > 0 ? o.L : minimal_size(g, o.lmax, o.extra_radius);
    const auto lattice = ColorCodeLattice::build(g, L);
    EnumerationOptions eo;
    eo.center = o.center;
    eo.ell_max = o.lmax;
    eo.extra_radius = o.extra_radius;
    eo.prefilter = !o.no_prefilter;
    eo.keep_records = o.instances;
    if (o.center >= lattice.num_qubits()) throw UsageError("--center is not a qubit of the lattice");
    const CoefficientResult res = compute_coefficients(lattice, eo);
    for (Color c : cs) {
      if (o.instances) {
        for (const auto& r : res.records) {
          const Rational& e = r.E[index(c)];
          if (r.qubits.size() < 2 || e == 0) continue;
          std::int64_t scale = 1;
          for (std::size_t k = 1; k <= r.qubits.size(); ++k) scale *= static_cast<std::int64_t>(3 * k);
          const std::string qs = join(r.qubits, [](QubitId q) { return std::to_string(q); });
          table.add({str(to_string(g)), str(to_string(c)), num(L),
                     num(static_cast<std::int64_t>(r.qubits.size())), qs, frac(r.R[index(c)]),
                     frac(e), frac(e * scale), num(scale)});
        }
      } else {
        for (const auto& row : res.tables[index(c)].rows) {
          table.add({str(to_string(g)), str(to_string(c)), num(L), num(row.ell), num(row.count),
                     frac(row.mean_R), frac(row.mean_E), frac(row.alpha)});
        }
      }
    }
  }
  emit(common.dest, std::string(o.instances ? "instances-" : "coeffs-") + tag(gs), format, config, table);
  return 0;
}

// ---------------------------------------------------------------- thresholds

int cmd_thresholds(const ThresholdsOptions& o, const Common& common) {
  const auto gs = geometries_of(o.geometries);
  const auto cs = colors_of(o.colors);
  if (o.lmax < 1 || o.lmax > 4) throw UsageError("--lmax must lie in 1..4");
  const Format format = parse_format(common.format);

  RunConfig config{"thresholds", {}};
  config.set("geometry", join_geometries(gs));
  config.set("color", join_colors(cs));
  config.set("lmax", std::to_string(o.lmax));
  config.set("format", common.format);

  Table table;
  table.kind = "thresholds";
  table.columns = {"geometry", "color", "shrunk_lattice", "r_c_expression", "r_c", "p_c_analytic"};
  for (int ell = 1; ell <= o.lmax; ++ell) table.columns.push_back("alpha_" + std::to_string(ell));
  table.notes.push_back("p_c_analytic solves sum_ell alpha_ell p^ell = r_c");

  for (Geometry g : gs) {
    const auto lattice = ColorCodeLattice::build(g, minimal_size(g, o.lmax));
    EnumerationOptions eo;
    eo.ell_max = o.lmax;
    const CoefficientResult res = compute_coefficients(lattice, eo);
    for (Color c : cs) {
      const ThresholdConstant k = r_c_constant(g, c);
      const CoefficientTable& t = res.tables[index(c)];
      std::vector<Cell> row{str(to_string(g)), str(to_string(c)), k.lattice, k.expression, k.value,
                            analytic_threshold(t, k.value)};
      for (const auto& r : t.rows) row.push_back(frac(r.alpha));
      table.add(std::move(row));
    }
  }
  emit(common.dest, "thresholds-" + tag(gs), format, config, table);
  return 0;
}

// ---------------------------------------------------------------- mc

namespace {

int default_rcurve_size(Geometry g) {
  switch (g) {
    case Geometry::G488: return 32;   // 4096 qubits
    case Geometry::G666: return 26;   // 4056
    case Geometry::G4612: return 18;  // 3888
  }
  return 16;
}

}  // namespace

int cmd_mc_rcurve(const RCurveOptions& o, const Common& common) {
  const auto gs = geometries_of(o.geometries);
  const Format format = parse_format(common.format);
  require_positive(o.samples);
  for (double p : o.p) {
    if (!(p >= 0.0 && p <= 1.0)) throw UsageError("loss rates must lie in [0, 1]");
  }

  RunConfig config{"mc r-curve", {}};
  config.set("geometry", join_geometries(gs));
  if (!o.sizes.empty()) config.set("size", join_ints(o.sizes));
  config.set("p", join(o.p, [](double p) { return format_double(p); }));
  config.set("samples", std::to_string(o.samples));
  config.set("seed", std::to_string(o.seed));
  config.set("format", common.format);

  Table table;
  table.kind = "r_curve";
  table.columns = {"geometry", "L", "N", "p", "color", "r_mc", "stderr", "r_order1", "r_order2", "r_order3"};
  table.notes.push_back("r_mc: mean erased fraction of original shrunk-lattice edges");
  table.notes.push_back("r_orderK: analytic expansion truncated after p^K");

  for (Geometry g : gs) {
    const CoefficientResult coeffs =
        compute_coefficients(ColorCodeLattice::build(g, minimal_size(g, 3)), {});
    const std::vector<int> sizes = o.sizes.empty() ? std::vector<int>{default_rcurve_size(g)} : o.sizes;
    for (int L : sizes) {
      const Workbench bench = Workbench::make(g, L);
      for (double p : o.p) {
        const REstimate est = estimate_r(bench, p, o.samples, o.seed, common.threads);
        for (Color c : kColors) {
          const CoefficientTable& t = coeffs.tables[index(c)];
          std::array<double, 3> partial{};
          double acc = 0.0;
          for (int ell = 1; ell <= 3; ++ell) {
            acc += to_double(t.row(ell).alpha) * std::pow(p, ell);
            partial[static_cast<std::size_t>(ell - 1)] = acc;
          }
          table.add({str(to_string(g)), num(L), num(static_cast<std::int64_t>(bench.num_qubits())), p,
                     str(to_string(c)), est.r[index(c)].mean, est.r[index(c)].stderr_, partial[0],
                     partial[1], partial[2]});
        }
      }
    }
  }
  emit(common.dest, "rcurve-" + tag(gs), format, config, table);
  return 0;
}

namespace {

struct SizesRun {
  std::vector<Geometry> geometries;
  std::map<Geometry, std::vector<ThresholdPoint>> points;
};

SizesRun run_sizes(const SizesOptions& o, const Common& common, bool pf, RunConfig& config) {
  SizesRun run;
  run.geometries = geometries_of(o.geometries);
  require_positive(o.samples);
  if (o.sizes.empty()) throw UsageError("--L needs at least one size");
  const PfRemoval removal = parse_removal(o.removal);
  config.set("geometry", join_geometries(run.geometries));
  config.set("size", join_ints(o.sizes));
  config.set("samples", std::to_string(o.samples));
  config.set("seed", std::to_string(o.seed));
  if (pf) config.set("removal", o.removal);
  config.set("nu", format_double(o.nu));
  config.set("format", common.format);
  for (Geometry g : run.geometries) {
    for (int L : o.sizes) {
      ThresholdRequest rq;
      rq.pc = !pf;
      rq.pf = pf;
      rq.pf_removal = removal;
      rq.samples = o.samples;
      rq.seed = o.seed;
      rq.threads = common.threads;
      run.points[g].push_back(threshold_point(g, L, rq));
      std::cerr << "sampled " << to_string(g) << " L=" << L << "\n";
    }
  }
  return run;
}

void add_series(Table& table, Geometry g, const std::string& label, const std::vector<ScalingPoint>& pts,
                double nu) {
  for (const auto& p : pts) {
    table.add({str("point"), str(to_string(g)), label, num(p.L), p.value, p.stderr_,
               num(static_cast<std::int64_t>(p.n))});
  }
  std::set<int> sizes;
  for (const auto& p : pts) sizes.insert(p.L);
  if (sizes.size() < 3) return;
  const ScalingEstimate f = scaling_fit(pts, nu);
  table.add({str("fit"), str(to_string(g)), label, str("inf"), f.intercept, f.intercept_stderr,
             num(static_cast<std::int64_t>(pts.size()))});
}

Table sizes_table(const std::string& kind, const std::string& what) {
  Table t;
  t.kind = kind;
  t.columns = {"kind", "geometry", "series", "L", "value", "stderr", "n"};
  t.notes.push_back("point rows: mean " + what + " over samples at one L");
  t.notes.push_back("fit rows: intercept of value = a + b L^(-1/nu), with its standard error");
  return t;
}

}  // namespace

int cmd_mc_pc(const SizesOptions& o, const Common& common) {
  const Format format = parse_format(common.format);
  RunConfig config{"mc pc", {}};
  const SizesRun run = run_sizes(o, common, false, config);
  Table table = sizes_table("p_c", "critical loss rate (last wrapping cluster broken)");
  for (Geometry g : run.geometries) {
    for (Color c : kColors) {
      std::vector<ScalingPoint> pts;
      for (const auto& p : run.points.at(g)) pts.push_back(p.p_c[index(c)]);
      add_series(table, g, std::string(to_string(c)), pts, o.nu);
    }
  }
  emit(common.dest, "pc-" + tag(run.geometries), format, config, table);
  return 0;
}

int cmd_mc_pf(const SizesOptions& o, const Common& common) {
  const Format format = parse_format(common.format);
  RunConfig config{"mc pf", {}};
  const SizesRun run = run_sizes(o, common, true, config);
  Table table = sizes_table("p_f", "loss rate at which logical information is first lost");
  table.notes.push_back("series red/blue/green: that color's string classes; any: all classes");
  for (Geometry g : run.geometries) {
    for (Color c : kColors) {
      std::vector<ScalingPoint> pts;
      for (const auto& p : run.points.at(g)) pts.push_back(p.p_f_color[index(c)]);
      add_series(table, g, std::string(to_string(c)), pts, o.nu);
    }
    std::vector<ScalingPoint> pts;
    for (const auto& p : run.points.at(g)) pts.push_back(p.p_f);
    add_series(table, g, "any", pts, o.nu);
  }
  emit(common.dest, "pf-" + tag(run.geometries), format, config, table);
  return 0;
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char ch = line[i];
    if (quoted) {
      if (ch == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cur += '"';
        ++i;
      } else if (ch == '"') {
        quoted = false;
      } else {
        cur += ch;
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (ch != '\r') {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

int cmd_mc_scaling(const ScalingOptions& o, const Common& common) {
  const Format format = parse_format(common.format);
  std::ifstream in(o.input);
  if (!in) throw UsageError("cannot read " + o.input);

  std::vector<std::pair<std::string, std::string>> filters;
  for (const auto& s : o.select) {
    const auto eq = s.find('=');
    if (eq == std::string::npos) throw UsageError("--select expects column=value, got '" + s + "'");
    filters.emplace_back(s.substr(0, eq), s.substr(eq + 1));
  }

  std::vector<std::string> header;
  std::vector<ScalingPoint> points;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto fields = split_csv_line(line);
    if (header.empty()) {
      header = fields;
      continue;
    }
    auto col = [&](const std::string& name) -> const std::string* {
      const auto it = std::find(header.begin(), header.end(), name);
      if (it == header.end()) return nullptr;
      const auto i = static_cast<std::size_t>(it - header.begin());
      return i < fields.size() ? &fields[i] : nullptr;
    };
    bool keep = true;
    for (const auto& [k, v] : filters) {
      const std::string* f = col(k);
      if (!f) throw UsageError("input has no column '" + k + "'");
      keep = keep && *f == v;
    }
    if (!keep) continue;
    const std::string* Ls = col("L");
    const std::string* vs = col(o.value_column);
    if (!Ls || !vs) throw UsageError("input needs columns L and " + o.value_column);
    ScalingPoint p;
    try {
      std::size_t used = 0;
      p.L = std::stoi(*Ls, &used);
      if (used != Ls->size()) continue;  // fit rows ("inf") and the like
      p.value = std::stod(*vs);
    } catch (const std::logic_error&) {
      continue;
    }
    if (const std::string* se = col("stderr")) p.stderr_ = std::atof(se->c_str());
    if (const std::string* n = col("n")) p.n = static_cast<std::size_t>(std::atoll(n->c_str()));
    points.push_back(p);
  }
  if (header.empty()) throw UsageError(o.input + " has no header row");

  const ScalingEstimate f = scaling_fit(points, o.nu);

  RunConfig config{"mc scaling", {}};
  config.set("input", o.input);
  config.set("value-column", o.value_column);
  for (const auto& s : o.select) config.set("select", s);
  config.set("nu", format_double(o.nu));
  config.set("format", common.format);

  Table table;
  table.kind = "scaling";
  table.columns = {"name", "L", "value"};
  table.notes.push_back("least-squares fit of value = intercept + slope * L^(-1/nu)");
  table.add({str("intercept"), str(""), f.intercept});
  table.add({str("intercept_stderr"), str(""), f.intercept_stderr});
  table.add({str("slope"), str(""), f.slope});
  table.add({str("nu"), str(""), f.nu});
  for (std::size_t i = 0; i < f.points.size(); ++i) {
    table.add({str("residual"), num(f.points[i].L), f.residuals[i]});
  }
  emit(common.dest, "scaling", format, config, table);
  return 0;
}

// ---------------------------------------------------------------- trace

int cmd_trace(const TraceOptions& o, const Common& common) {
  if (!(o.p >= 0.0 && o.p <= 1.0)) throw UsageError("--p must lie in [0, 1]");
  const Geometry g = parse_geometry(o.geometry);
  ColorCodeLattice state = ColorCodeLattice::build(g, o.L);

  RunConfig config{"trace", {}};
  config.set("geometry", std::string(to_string(g)));
  config.set("size", std::to_string(o.L));
  config.set("p", format_double(o.p));
  config.set("seed", std::to_string(o.seed));

  // same draw order as the r(p) estimator's first sample
  Rng rng = make_rng(point_seed(o.seed, g, o.L), 0);
  std::bernoulli_distribution lose(o.p);
  std::vector<QubitId> lost;
  for (QubitId q = 0; q < state.num_qubits(); ++q) {
    if (lose(rng)) lost.push_back(q);
  }
  std::shuffle(lost.begin(), lost.end(), rng);

  std::ostringstream out;
  nlohmann::ordered_json head;
  head["schema"] = "colorloss.trace";
  head["schema_version"] = kReportSchemaVersion;
  head["version"] = COLORLOSS_VERSION_STRING;
  head["command"] = config.command_line();
  head["lost"] = lost;
  out << head.dump() << "\n";

  TraceWriter trace(out);
  std::uniform_int_distribution<int> pick(0, 2);
  for (QubitId q : lost) {
    if (!state.alive(q)) continue;
    const Color c = color_from_index(static_cast<std::size_t>(pick(rng)));
    trace.step(state, q, state.neighbor(q, c));
  }
  emit_text(common.dest, "trace-" + std::to_string(o.seed) + ".jsonl", out.str());
  std::cerr << lost.size() << " losses, " << trace.steps_written() << " correction steps\n";
  return 0;
}

}  // namespace cli
