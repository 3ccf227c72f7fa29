#include <exception>
#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"

namespace {

void add_common(CLI::App& app, cli::Common& common, bool tabular) {
  if (tabular) {
    app.add_option("--format", common.format, "csv or json")->capture_default_str();
  }
  app.add_option("-o,--output", common.dest.file, "output file (default: stdout)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Loss correction on color-code lattices: exact coefficients and Monte Carlo thresholds"};
  app.set_version_flag("--version", std::string("colorloss ") + COLORLOSS_VERSION_STRING);
  app.require_subcommand(1);

  cli::Common common;
  app.add_option("--threads", common.threads, "worker threads, 0 for all cores")
      ->envname("COLORLOSS_THREADS");
  app.add_option("--output-dir", common.dest.dir, "directory for output files")
      ->envname("COLORLOSS_OUTPUT_DIR");

  cli::LatticeOptions lat;
  auto* lattice = app.add_subcommand("lattice", "build or reload a lattice and validate it");
  lattice->add_option("-g,--geometry", lat.geometry, "4.8.8, 6.6.6 or 4.6.12")->capture_default_str();
  lattice->add_option("-L,--size", lat.L, "torus size in unit cells")->capture_default_str();
  lattice->add_option("--input", lat.input, "JSON dump to reload instead of building")
      ->check(CLI::ExistingFile);
  lattice->add_option("--indent", lat.indent, "JSON indent, -1 for one line")->capture_default_str();
  add_common(*lattice, common, false);

  cli::CoeffsOptions co;
  auto* coeffs = app.add_subcommand("coeffs", "exact series coefficients of r(p)");
  coeffs->add_option("-g,--geometry", co.geometries, "geometries or 'all'")->delimiter(',')->capture_default_str();
  coeffs->add_option("-c,--color", co.colors, "colors or 'all'")->delimiter(',')->capture_default_str();
  coeffs->add_option("--lmax", co.lmax, "highest order")->capture_default_str();
  coeffs->add_option("-L,--size", co.L, "torus size, 0 for the smallest that fits")->capture_default_str();
  coeffs->add_option("--center", co.center, "center qubit")->capture_default_str();
  coeffs->add_option("--extra-radius", co.extra_radius, "grow every patch")->capture_default_str();
  coeffs->add_flag("--no-prefilter", co.no_prefilter, "enumerate separable pairs too");
  coeffs->add_flag("--instances", co.instances, "list fully interacting instances instead");
  add_common(*coeffs, common, true);

  cli::ThresholdsOptions th;
  auto* thresholds = app.add_subcommand("thresholds", "r_c constants and analytic p_c");
  thresholds->add_option("-g,--geometry", th.geometries, "geometries or 'all'")->delimiter(',')->capture_default_str();
  thresholds->add_option("-c,--color", th.colors, "colors or 'all'")->delimiter(',')->capture_default_str();
  thresholds->add_option("--lmax", th.lmax, "series order")->capture_default_str();
  add_common(*thresholds, common, true);

  auto* mc = app.add_subcommand("mc", "Monte Carlo estimates");
  mc->require_subcommand(1);

  cli::RCurveOptions rc;
  auto* rcurve = mc->add_subcommand("r-curve", "erased fraction r(p) against the series");
  rcurve->add_option("-g,--geometry", rc.geometries, "geometries or 'all'")->delimiter(',')->capture_default_str();
  rcurve->add_option("-L,--size", rc.sizes, "torus sizes (default: about 4000 qubits)")->delimiter(',');
  rcurve->add_option("-p,--p", rc.p, "loss rates")->delimiter(',')->capture_default_str();
  rcurve->add_option("-n,--samples", rc.samples, "samples per point")->capture_default_str();
  rcurve->add_option("-s,--seed", rc.seed, "base seed")->capture_default_str();
  add_common(*rcurve, common, true);

  cli::SizesOptions pco;
  cli::SizesOptions pfo;
  auto* pc = mc->add_subcommand("pc", "per-size p_c and its extrapolation");
  auto* pf = mc->add_subcommand("pf", "per-size p_f and its extrapolation");
  for (auto [sub, o] : {std::pair{pc, &pco}, std::pair{pf, &pfo}}) {
    sub->add_option("-g,--geometry", o->geometries, "geometries or 'all'")->delimiter(',')->capture_default_str();
    sub->add_option("-L,--size", o->sizes, "torus sizes")->delimiter(',')->capture_default_str();
    sub->add_option("-n,--samples", o->samples, "samples per size")->capture_default_str();
    sub->add_option("-s,--seed", o->seed, "base seed")->capture_default_str();
    sub->add_option("--nu", o->nu, "correlation-length exponent of the fit")->capture_default_str();
    add_common(*sub, common, true);
  }
  pf->add_option("--removal", pfo.removal, "lost-and-sacrificed or lost-only")->capture_default_str();

  cli::ScalingOptions sc;
  auto* scaling = mc->add_subcommand("scaling", "finite-size fit of a CSV column");
  scaling->add_option("input,--input", sc.input, "CSV with columns L and the value column")
      ->required()
      ->check(CLI::ExistingFile);
  scaling->add_option("--value-column", sc.value_column, "column to fit")->capture_default_str();
  scaling->add_option("--select", sc.select, "keep rows with column=value (repeatable)");
  scaling->add_option("--nu", sc.nu, "correlation-length exponent")->capture_default_str();
  add_common(*scaling, common, true);

  cli::TraceOptions tr;
  auto* trace = app.add_subcommand("trace", "JSON-lines log of one corrected loss pattern");
  trace->add_option("-g,--geometry", tr.geometry, "geometry")->capture_default_str();
  trace->add_option("-L,--size", tr.L, "torus size")->capture_default_str();
  trace->add_option("-p,--p", tr.p, "loss rate")->capture_default_str();
  trace->add_option("-s,--seed", tr.seed, "seed")->capture_default_str();
  add_common(*trace, common, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (lattice->parsed()) return cli::cmd_lattice(lat, common);
    if (coeffs->parsed()) return cli::cmd_coeffs(co, common);
    if (thresholds->parsed()) return cli::cmd_thresholds(th, common);
    if (rcurve->parsed()) return cli::cmd_mc_rcurve(rc, common);
    if (pc->parsed()) return cli::cmd_mc_pc(pco, common);
    if (pf->parsed()) return cli::cmd_mc_pf(pfo, common);
    if (scaling->parsed()) return cli::cmd_mc_scaling(sc, common);
    if (trace->parsed()) return cli::cmd_trace(tr, common);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
