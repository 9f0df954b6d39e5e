// Command-line front end: reproduces the closed-form OAM table, runs the
// operator-identity and oracle-equivalence suites, lists the spectrum, and
// emits classical cyclotron trajectories with their OAM time series.
//
// Exit status: 0 when every report record passes, 1 on any failed record,
// 2 on usage or configuration errors.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "landau/landau.hpp"

namespace {

using landau::report::ClassicalRun;
using landau::report::Report;
using landau::report::RunConfig;

struct CommonOptions {
  RunConfig run;
  std::string format;
  std::string out;
  double tol = 0.0;
};

void add_common_flags(CLI::App* cmd, CommonOptions& opts,
                      const std::string& default_format) {
  opts.format = default_format;
  cmd->add_option("--B", opts.run.B, "magnetic field strength")
      ->capture_default_str();
  cmd->add_option("--e", opts.run.e, "elementary charge magnitude")
      ->capture_default_str();
  cmd->add_option("--mass", opts.run.mass, "electron mass")
      ->capture_default_str();
  cmd->add_option("--nmax", opts.run.n_max, "largest Landau index in the grid")
      ->capture_default_str();
  cmd->add_option("--mmin", opts.run.m_min,
                  "smallest magnetic quantum number in the grid")
      ->capture_default_str();
  cmd->add_option("--cutoff", opts.run.cutoff,
                  "per-mode occupation cutoff of the number basis")
      ->capture_default_str();
  cmd->add_option("--margin", opts.run.margin,
                  "interior margin below the cutoff")
      ->capture_default_str();
  cmd->add_option("--quad-order", opts.run.quad_order,
                  "radial Gauss-Laguerre order")
      ->capture_default_str();
  cmd->add_option("--tol", opts.tol,
                  "override every check tolerance with this value");
  cmd->add_option("--format", opts.format, "output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  cmd->add_option("--out", opts.out, "output path (stdout when omitted)");
  cmd->add_flag("--parallel", opts.run.parallel,
                "run the state sweeps on multiple threads");
}

void apply_tol_override(const CLI::App* cmd, CommonOptions& opts) {
  if (cmd->count("--tol") > 0) opts.run.tol_override = opts.tol;
}

int emit_report(const Report& report, const CommonOptions& opts) {
  const std::string body = opts.format == "csv"
                               ? landau::report::to_csv_string(report)
                               : landau::report::to_json_string(report);
  if (opts.out.empty()) {
    std::cout << body;
  } else {
    std::ofstream file(opts.out);
    if (!file) {
      std::cerr << "error: cannot open " << opts.out << "\n";
      return 2;
    }
    file << body;
  }
  return report.pass() ? 0 : 1;
}

std::string sibling_rk4_path(const std::string& out) {
  std::filesystem::path path(out);
  const std::string stem = path.stem().string();
  const std::string ext = path.extension().string();
  path.replace_filename(stem + "_rk4" + ext);
  return path.string();
}

int run_classical(const CLI::App* cmd, CommonOptions& opts,
                  const ClassicalRun& classical_run) {
  apply_tol_override(cmd, opts);
  std::vector<landau::classical::ClassicalState> closed;
  std::vector<landau::classical::ClassicalState> rk4;
  const Report report = landau::report::build_classical_report(
      opts.run, classical_run, &closed, &rk4);

  if (opts.format == "json") {
    return emit_report(report, opts);
  }

  const auto cfg = opts.run.physical();
  const auto ic = landau::classical::make_initial_conditions(
      cfg, classical_run.x0, classical_run.y0, classical_run.vx0,
      classical_run.vy0);

  if (opts.out.empty()) {
    landau::report::write_trajectory_csv(std::cout, closed, ic, cfg);
    std::cerr << landau::report::to_json_string(report);
    return report.pass() ? 0 : 1;
  }

  std::ofstream closed_file(opts.out);
  if (!closed_file) {
    std::cerr << "error: cannot open " << opts.out << "\n";
    return 2;
  }
  landau::report::write_trajectory_csv(closed_file, closed, ic, cfg);

  const std::string rk4_name = sibling_rk4_path(opts.out);
  std::ofstream rk4_file(rk4_name);
  if (!rk4_file) {
    std::cerr << "error: cannot open " << rk4_name << "\n";
    return 2;
  }
  landau::report::write_trajectory_csv(rk4_file, rk4, ic, cfg);

  std::cout << landau::report::to_json_string(report);
  return report.pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Numerical laboratory for the Landau-level system: canonical, "
      "mechanical, and pseudo orbital angular momenta about the origin and "
      "the guiding center, cross-checked by independent routes."};
  app.require_subcommand(1);

  int exit_code = 0;

  auto* table1 = app.add_subcommand(
      "table1", "six OAM expectation values per state, both quantum routes");
  auto table1_opts = std::make_shared<CommonOptions>();
  add_common_flags(table1, *table1_opts, "json");
  table1->callback([table1, table1_opts, &exit_code] {
    apply_tol_override(table1, *table1_opts);
    exit_code = emit_report(
        landau::report::build_table1_report(table1_opts->run), *table1_opts);
  });

  auto* verify = app.add_subcommand(
      "verify",
      "operator identities, conservation laws, norms, radii, and the "
      "two-route equivalence sweep");
  auto verify_opts = std::make_shared<CommonOptions>();
  add_common_flags(verify, *verify_opts, "json");
  verify->callback([verify, verify_opts, &exit_code] {
    apply_tol_override(verify, *verify_opts);
    exit_code = emit_report(
        landau::report::build_verify_report(verify_opts->run), *verify_opts);
  });

  auto* spectrum = app.add_subcommand(
      "spectrum", "Landau levels from closed form, quadrature, and the "
                  "number-basis eigenvalues");
  auto spectrum_opts = std::make_shared<CommonOptions>();
  add_common_flags(spectrum, *spectrum_opts, "json");
  spectrum->callback([spectrum, spectrum_opts, &exit_code] {
    apply_tol_override(spectrum, *spectrum_opts);
    exit_code = emit_report(
        landau::report::build_spectrum_report(spectrum_opts->run),
        *spectrum_opts);
  });

  auto* classical = app.add_subcommand(
      "classical",
      "cyclotron trajectory time series (closed form and RK4) plus a "
      "summary report");
  auto classical_opts = std::make_shared<CommonOptions>();
  auto classical_run = std::make_shared<ClassicalRun>();
  add_common_flags(classical, *classical_opts, "csv");
  classical->add_option("--x0", classical_run->x0, "initial x")
      ->capture_default_str();
  classical->add_option("--y0", classical_run->y0, "initial y")
      ->capture_default_str();
  classical->add_option("--vx0", classical_run->vx0, "initial x velocity")
      ->capture_default_str();
  classical->add_option("--vy0", classical_run->vy0, "initial y velocity")
      ->capture_default_str();
  classical
      ->add_option("--samples", classical_run->samples,
                   "Simpson subintervals per period (>= 16)")
      ->capture_default_str();
  classical
      ->add_option("--dt", classical_run->dt,
                   "RK4 time step (0 selects one thousandth of a period)")
      ->capture_default_str();
  classical->callback([classical, classical_opts, classical_run, &exit_code] {
    exit_code = run_classical(classical, *classical_opts, *classical_run);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    return app.exit(err);
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  }
  return exit_code;
}
