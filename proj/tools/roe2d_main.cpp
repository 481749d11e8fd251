// roe2d: run the test battery from the command line.
//
//   roe2d run --case elling --mode low_diss --order 1
//   roe2d sweep --case colliding_1d --modes standard,low_diss,high_diss
//   roe2d list-cases
//   roe2d verify
//
// Exit codes: 0 completed, 2 physical abort (or failed verification), 1 usage error.

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "roe2d/checks.hpp"
#include "roe2d/diagnostics.hpp"
#include "roe2d/output.hpp"
#include "roe2d/solver.hpp"
#include "roe2d/testcases.hpp"

using namespace roe2d;

namespace {

constexpr int kCompleted = 0;
constexpr int kUsage = 1;
constexpr int kAborted = 2;

struct CommonFlags {
  std::string case_name;
  std::string config_path;
  std::optional<std::string> mode;
  std::optional<int> order;
  std::optional<double> phi, beta, cfl, t_end, noise;
  std::optional<std::uint64_t> seed;
  std::optional<int> nx, ny;
  std::optional<std::string> outdir;
  bool serial = false;
  bool timing = false;
  bool no_files = false;
};

void add_common(CLI::App* cmd, CommonFlags& f, bool with_mode) {
  cmd->add_option("--case", f.case_name, "test case (see list-cases)");
  cmd->add_option("--config", f.config_path, "key = value configuration file");
  if (with_mode) {
    cmd->add_option("--mode", f.mode, "standard|low_diss|high_diss|blend_geo|blend_arith");
    cmd->add_option("--order", f.order, "1 or 2");
  }
  cmd->add_option("--phi", f.phi, "low-Mach parameter");
  cmd->add_option("--beta", f.beta, "fixed blend weight; switches the indicator off");
  cmd->add_option("--seed", f.seed, "noise seed");
  cmd->add_option("--cfl", f.cfl, "Courant number");
  cmd->add_option("--nx", f.nx, "cells in x");
  cmd->add_option("--ny", f.ny, "cells in y");
  cmd->add_option("--noise", f.noise, "noise amplitude");
  cmd->add_option("--outdir", f.outdir, "output directory");
  cmd->add_option("--tend", f.t_end, "final time");
  cmd->add_flag("--serial", f.serial, "use the single-threaded reference kernels");
  cmd->add_flag("--timing", f.timing, "record wall-clock time in the manifest");
  cmd->add_flag("--no-files", f.no_files, "do not write output files");
}

ParsedConfig resolve(const CommonFlags& f) {
  ParsedConfig pc;
  if (!f.config_path.empty()) pc = load_config(f.config_path);
  RunConfig& r = pc.run;
  if (!f.case_name.empty()) pc.case_name = f.case_name;
  if (f.mode) r.model.mode = parse_wave_model(*f.mode);
  if (f.order) r.order = *f.order;
  if (f.phi) r.model.phi = *f.phi;
  if (f.beta) {
    r.model.beta_fixed = *f.beta;
    r.model.indicator = false;
  }
  if (f.seed) r.seed = *f.seed;
  if (f.cfl) r.cfl = *f.cfl;
  if (f.t_end) r.t_end = *f.t_end;
  if (f.outdir) r.output.dir = *f.outdir;
  if (f.serial) r.serial_kernels = true;
  if (f.timing) r.output.record_timing = true;
  if (f.no_files) r.output.write_files = false;
  if (f.nx) pc.overrides.nx = *f.nx;
  if (f.ny) pc.overrides.ny = *f.ny;
  if (f.noise) pc.overrides.noise = *f.noise;
  if (!pc.case_name) throw std::invalid_argument("a case is required (--case or 'case =' in --config)");
  r.validate();
  return pc;
}

std::string fmt(double v, const char* spec = "%.3e") {
  if (std::isnan(v)) return "-";
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

std::string one_line(const TestCase& tc, const RunConfig& r, const RunOutcome& o) {
  std::string s = tc.name + " mode=" + std::string(to_string(r.model.mode)) +
                  " order=" + std::to_string(r.order) + " seed=" + std::to_string(r.seed) + ": " +
                  std::string(to_string(o.status)) + " t=" + fmt(o.t_reached, "%.6g") +
                  " steps=" + std::to_string(o.steps);
  if (!o.completed()) s += " (" + o.diagnostic + ")";
  return s;
}

int do_run(const CommonFlags& f) {
  const ParsedConfig pc = resolve(f);
  TestCase tc = make_case(*pc.case_name, pc.run.gas);
  apply_overrides(tc, pc.overrides);
  const RunOutcome o = run(pc.run, tc);
  std::cout << one_line(tc, pc.run, o) << '\n';
  return o.completed() ? kCompleted : kAborted;
}

int do_sweep(const CommonFlags& f, const std::vector<std::string>& modes,
             const std::vector<int>& orders) {
  if (modes.empty()) throw std::invalid_argument("sweep needs at least one mode (--modes)");
  if (orders.empty()) throw std::invalid_argument("sweep needs at least one order (--orders)");
  const ParsedConfig base = resolve(f);
  std::vector<WaveModel> parsed;
  for (const auto& m : modes) parsed.push_back(parse_wave_model(m));

  std::printf("# case=%s seed=%llu\n", base.case_name->c_str(),
              static_cast<unsigned long long>(base.run.seed));
  std::printf("%-12s %5s %-10s %12s %8s %12s %12s %10s\n", "mode", "order", "outcome", "t_reached",
              "steps", "oscillation", "max|v|", "wall[s]");
  for (int order : orders)
    for (WaveModel m : parsed) {
      RunConfig r = base.run;
      r.order = order;
      r.model.mode = m;
      r.output.dir = base.run.output.dir / ("ord" + std::to_string(order));
      TestCase tc = make_case(*base.case_name, r.gas);
      apply_overrides(tc, base.overrides);
      const RunOutcome o = run(r, tc);
      const CaseSummary s = summarize(tc.name, o.field, r.gas);
      std::printf("%-12s %5d %-10s %12s %8ld %12s %12s %10s\n", std::string(to_string(m)).c_str(),
                  order, std::string(to_string(o.status)).c_str(), fmt(o.t_reached, "%.6g").c_str(),
                  o.steps, fmt(s.oscillation).c_str(), fmt(s.max_abs_v).c_str(),
                  fmt(o.wall_seconds, "%.2f").c_str());
      std::fflush(stdout);
    }
  return kCompleted;
}

int do_list() {
  for (const auto& [family, names] : case_families()) {
    std::cout << family << ':';
    for (const auto& n : names) std::cout << ' ' << n;
    std::cout << '\n';
  }
  return kCompleted;
}

int do_verify(std::uint64_t seed) {
  bool ok = true;
  for (const auto& r : checks::all(seed)) {
    std::printf("%s  %-62s measured=%.3e tol=%.1e\n", r.pass ? "PASS" : "FAIL", r.name.c_str(),
                r.measured, r.tolerance);
    ok = ok && r.pass;
  }
  return ok ? kCompleted : kAborted;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Roe-type finite-volume Euler solver and its test battery"};
  app.require_subcommand(1);

  CommonFlags run_flags;
  auto* run_cmd = app.add_subcommand("run", "run one case");
  add_common(run_cmd, run_flags, true);

  CommonFlags sweep_flags;
  std::vector<std::string> modes;
  std::vector<int> orders{1};
  auto* sweep_cmd = app.add_subcommand("sweep", "run a case for several modes and orders");
  add_common(sweep_cmd, sweep_flags, false);
  sweep_cmd->add_option("--modes", modes, "modes to compare")->delimiter(',')->required();
  sweep_cmd->add_option("--orders", orders, "orders to run")->delimiter(',');

  app.add_subcommand("list-cases", "print the test cases");

  std::uint64_t verify_seed = 2024;
  auto* verify_cmd = app.add_subcommand("verify", "randomised checks of the flux function");
  verify_cmd->add_option("--seed", verify_seed, "sampling seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*run_cmd) return do_run(run_flags);
    if (*sweep_cmd) return do_sweep(sweep_flags, modes, orders);
    if (app.got_subcommand("list-cases")) return do_list();
    if (*verify_cmd) return do_verify(verify_seed);
  } catch (const std::exception& e) {
    // bad flags, unknown case, I/O failures; physical aborts never get here
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
