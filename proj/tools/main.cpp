// Copyright (c) 2026 the qkdrates authors
// SPDX-License-Identifier: Apache-2.0
//
// Command line front end. Subcommands:
//   rate    point evaluation of the key-rate lower bounds
//   bound   entanglement upper bound at one channel setting
//   bb84    decoy-state BB84 rates at one link setting
//   sweep   grid sweep to CSV (named preset or spec file)
//   verify  run the built-in verification suite
//
// Exit codes: 0 success, 1 usage error, 2 numeric failure.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <string>

#include "CLI11.hpp"
#include "qkdrates/bb84.hpp"
#include "qkdrates/common.hpp"
#include "qkdrates/entanglement.hpp"
#include "qkdrates/key_rates.hpp"
#include "qkdrates/sweep.hpp"
#include "qkdrates/verify.hpp"
#include "qkdrates/wiretap.hpp"

namespace {

namespace fs = std::filesystem;
using qkdrates::wiretap::ChannelParams;

constexpr double kInf = std::numeric_limits<double>::infinity();

struct ChannelFlags {
  double eta = 0;
  double kappa = 0;
  double ne = 0;
  double mu = kInf;
  double beta = 1.0;
};

void add_channel_flags(CLI::App* cmd, ChannelFlags& f, bool with_mu_beta) {
  cmd->add_option("--eta", f.eta, "channel transmissivity, in (0,1)")
      ->required();
  cmd->add_option("--kappa", f.kappa,
                  "fraction of the lost light the eavesdropper collects, in (0,1]")
      ->required();
  cmd->add_option("--ne", f.ne,
                  "injected thermal photons per mode (0 for pure loss)");
  if (with_mu_beta) {
    cmd->add_option("--mu", f.mu,
                    "source photons per arm; inf selects the asymptotic forms");
    cmd->add_option("--beta", f.beta, "reconciliation efficiency, in (0,1]");
  }
}

int run_rate(const ChannelFlags& f) {
  bool asymptotic = !std::isfinite(f.mu);
  // ccq (and rr when beta < 1) have no closed asymptotic form; stand in
  // with a large intensity, matching the sweep runner.
  double stand_in = 1e6;
  ChannelParams finite{f.eta, f.kappa, f.ne, asymptotic ? stand_in : f.mu};
  finite.validate();

  namespace rates = qkdrates::rates;
  double dr = asymptotic
                  ? rates::dr_thermal_limit(f.eta, f.kappa, f.ne).bits_per_mode
                  : rates::dr_thermal(finite).bits_per_mode;
  double rr;
  if (f.beta == 1.0)
    rr = asymptotic
             ? rates::rr_thermal_limit(f.eta, f.kappa, f.ne).bits_per_mode
             : rates::rr_thermal(finite).bits_per_mode;
  else
    rr = rates::hashing_rr_numeric(finite, f.beta).bits_per_mode;
  double ccq = rates::ccq_rate(finite, f.beta).bits_per_mode;

  std::printf("direct reconciliation   %.9g bits per mode\n", dr);
  std::printf("reverse reconciliation  %.9g bits per mode\n", rr);
  std::printf("both sides measured     %.9g bits per mode\n", ccq);
  if (asymptotic)
    std::printf("(columns without a closed asymptotic form evaluated at mu=%g)\n",
                stand_in);
  if (dr < 0 || rr < 0 || ccq < 0)
    std::printf("(negative values mean no distillable key for that flow)\n");
  return 0;
}

int run_bound(const ChannelFlags& f) {
  namespace bounds = qkdrates::bounds;
  if (f.ne == 0.0) {
    double ub = bounds::er_upper_bound_pure_loss(f.eta, f.kappa);
    std::printf("upper bound  %.9g bits per mode (pure loss closed form)\n", ub);
    return 0;
  }
  ChannelParams p{f.eta, f.kappa, f.ne, 1.0};
  p.validate();
  std::vector<double> schedule = bounds::default_mu_schedule();
  bounds::UpperBoundResult res = bounds::er_upper_bound_numeric(p, schedule);
  std::printf("upper bound  %.9g bits per mode (supremum over the source "
              "intensity)\n",
              res.bits);
  for (std::size_t i = 0; i < schedule.size() && i < res.per_mu.size(); ++i)
    std::printf("  mu=%-10.4g %.9g\n", schedule[i], res.per_mu[i]);
  if (!res.converged)
    std::fprintf(stderr,
                 "warning: not saturated at the end of the intensity "
                 "schedule; the bound may still be rising\n");
  return 0;
}

struct Bb84Flags {
  double rate_hz = 1e9;
  double eta = 0.005;
  double kappa = 0.01;
  double eta_e = -1;  // <0: derive from kappa
  double n_d = 1e-4;
  double f_l = 1.1;
  double mu = -1;  // <0: optimize
};

int run_bb84(const Bb84Flags& f) {
  namespace bb84 = qkdrates::bb84;
  bb84::Bb84Params p;
  p.rate_R = f.rate_hz;
  p.eta = f.eta;
  p.eta_e = f.eta_e >= 0 ? f.eta_e : f.kappa * (1.0 - f.eta);
  p.n_d = f.n_d;
  p.f_l = f.f_l;

  if (f.mu >= 0) {
    p.mu = f.mu;
    p.validate();
    std::printf("unrestricted  %.9g bits/s\n", bb84::skr_unrestricted(p));
    std::printf("restricted    %.9g bits/s  (eta_e=%g)\n", bb84::skr_restricted(p),
                p.eta_e);
    return 0;
  }
  p.validate();
  for (bool restricted : {false, true}) {
    bb84::MuOptimum opt = bb84::optimize_mu(p, restricted);
    const char* tag = restricted ? "restricted  " : "unrestricted";
    if (opt.flat)
      std::printf("%s  no positive rate for mu in [1e-3, 10]\n", tag);
    else
      std::printf("%s  %.9g bits/s at mu=%.6g\n", tag, opt.skr_star, opt.mu_star);
  }
  std::printf("(eta_e=%g)\n", p.eta_e);
  return 0;
}

struct SweepFlags {
  std::string what;
  std::string preset;
  std::string out;
  bool no_timestamp = false;
  bool gnuplot = false;
  bool list = false;
  int threads = 0;
};

int list_presets() {
  for (const auto& s : qkdrates::sweep::presets())
    std::printf("%-8s %5zu rows   %s\n", s.name.c_str(), s.row_count(),
                s.notes.c_str());
  return 0;
}

int run_sweep_cmd(const SweepFlags& f) {
  namespace sweep = qkdrates::sweep;
  if (f.list) return list_presets();

  std::string source = !f.preset.empty() ? f.preset : f.what;
  if (source.empty()) {
    std::fprintf(stderr,
                 "error: sweep needs a preset name or a spec file "
                 "(see --list)\n");
    return 1;
  }

  sweep::SweepSpec spec;
  if (const sweep::SweepSpec* p = sweep::find_preset(source)) {
    spec = *p;
  } else if (fs::exists(source)) {
    std::ifstream in(source);
    if (!in) {
      std::fprintf(stderr, "error: cannot read '%s'\n", source.c_str());
      return 1;
    }
    spec = sweep::parse_spec_file(in);
    if (spec.name.empty()) spec.name = fs::path(source).stem().string();
  } else {
    std::fprintf(stderr, "error: '%s' is neither a preset nor a file\n",
                 source.c_str());
    return 1;
  }

  sweep::SweepOptions opts;
  opts.timestamp = !f.no_timestamp;
  opts.threads = f.threads;

  // Output resolution: --out wins ('-' is stdout, a directory gets
  // <name>.csv inside); otherwise $QKDRATES_OUT or the working directory.
  std::string base = spec.name.empty() ? "sweep" : spec.name;
  fs::path path;
  if (f.out == "-") {
    std::size_t failed = sweep::run_sweep(spec, std::cout, opts);
    if (failed)
      std::fprintf(stderr, "warning: %zu of %zu rows had numeric failures\n",
                   failed, spec.row_count());
    return 0;
  }
  if (!f.out.empty()) {
    path = f.out;
    if (fs::is_directory(path)) path /= base + ".csv";
  } else {
    const char* env = std::getenv("QKDRATES_OUT");
    path = env && *env ? fs::path(env) : fs::path(".");
    path /= base + ".csv";
  }
  if (path.has_parent_path()) fs::create_directories(path.parent_path());

  std::ofstream out(path);
  if (!out) {
    std::fprintf(stderr, "error: cannot write '%s'\n", path.c_str());
    return 1;
  }
  std::size_t failed = sweep::run_sweep(spec, out, opts);
  std::printf("wrote %zu rows to %s\n", spec.row_count(), path.c_str());
  if (failed)
    std::fprintf(stderr, "warning: %zu rows had numeric failures (see the "
                 "error column)\n",
                 failed);
  if (f.gnuplot) {
    fs::path gp = path;
    gp += ".gp";
    std::ofstream script(gp);
    script << sweep::gnuplot_script(spec, path.filename().string());
    std::printf("wrote companion script %s\n", gp.c_str());
  }
  return 0;
}

int run_verify() {
  auto results = qkdrates::verify::run_all(&std::cout);
  int failed = 0;
  for (const auto& r : results) failed += r.pass ? 0 : 1;
  if (failed) {
    std::printf("%d of %zu checks failed\n", failed, results.size());
    return 2;
  }
  std::printf("all %zu checks passed\n", results.size());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Secret-key rates and entanglement bounds for lossy bosonic channels "
      "with a partially collecting eavesdropper"};
  app.require_subcommand(1);
  app.footer("Default output directory for sweeps: $QKDRATES_OUT (else the "
             "working directory).");

  ChannelFlags rate_f;
  CLI::App* rate = app.add_subcommand(
      "rate", "Key-rate lower bounds at one channel setting");
  add_channel_flags(rate, rate_f, true);

  ChannelFlags bound_f;
  CLI::App* bound = app.add_subcommand(
      "bound", "Entanglement upper bound at one channel setting");
  add_channel_flags(bound, bound_f, false);

  Bb84Flags bb84_f;
  CLI::App* bb84 = app.add_subcommand(
      "bb84", "Decoy-state BB84 rates at one link setting");
  bb84->add_option("--rate", bb84_f.rate_hz, "pulse rate in pulses/s");
  bb84->add_option("--eta", bb84_f.eta, "Alice-to-Bob transmissivity");
  bb84->add_option("--kappa", bb84_f.kappa,
                   "eavesdropper collection fraction (sets eta_e=kappa*(1-eta))");
  bb84->add_option("--eta-e", bb84_f.eta_e,
                   "Alice-to-Eve transmissivity (overrides --kappa)");
  bb84->add_option("--nd", bb84_f.n_d, "dark counts per detector per window");
  bb84->add_option("--fl", bb84_f.f_l, "reconciliation inefficiency, >= 1");
  bb84->add_option("--mu", bb84_f.mu,
                   "signal intensity; omit to optimize over [1e-3, 10]");

  SweepFlags sweep_f;
  CLI::App* sweep = app.add_subcommand(
      "sweep", "Evaluate a parameter grid and write a CSV dataset");
  sweep->add_option("what", sweep_f.what, "preset name or spec file path");
  sweep->add_option("--preset", sweep_f.preset, "preset name");
  sweep->add_option("--out", sweep_f.out,
                    "output file or directory ('-' for stdout)");
  sweep->add_flag("--no-timestamp", sweep_f.no_timestamp,
                  "omit the generation-time header for byte-stable output");
  sweep->add_flag("--gnuplot", sweep_f.gnuplot,
                  "also write a companion gnuplot script next to the CSV");
  sweep->add_flag("--list", sweep_f.list, "list the available presets");
  sweep->add_option("--threads", sweep_f.threads,
                    "worker threads (0 = hardware concurrency)");

  CLI::App* verify =
      app.add_subcommand("verify", "Run the built-in verification suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (rate->parsed()) return run_rate(rate_f);
    if (bound->parsed()) return run_bound(bound_f);
    if (bb84->parsed()) return run_bb84(bb84_f);
    if (sweep->parsed()) return run_sweep_cmd(sweep_f);
    if (verify->parsed()) return run_verify();
  } catch (const qkdrates::domain_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 1;
}
