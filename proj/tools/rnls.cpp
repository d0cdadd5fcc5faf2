// rnls: simulate, verify, bubbles, scatter, sweep.

#include <glob.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <future>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rnls/analysis.hpp"
#include "rnls/config.hpp"
#include "rnls/diagnostics.hpp"
#include "rnls/error.hpp"
#include "rnls/evolver.hpp"
#include "rnls/norms.hpp"
#include "rnls/run_io.hpp"
#include "rnls/scattering.hpp"
#include "rnls/sine_transform.hpp"
#include "rnls/verify.hpp"

namespace fs = std::filesystem;
using namespace rnls;

namespace {

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::config: return 2;
    case ErrorKind::truncation: return 3;
    case ErrorKind::range: return 4;
    case ErrorKind::kernel_resolution: return 5;
    case ErrorKind::resolution: return 6;
    case ErrorKind::undefined: return 7;
    case ErrorKind::annulus_search: return 8;
    case ErrorKind::io: return 9;
    case ErrorKind::integrity: return 10;
  }
  return 70;
}

void report_error(std::string_view kind, const std::string& message) {
  std::cerr << nlohmann::json{{"error", kind}, {"message", message}}.dump() << "\n";
}

fs::path output_root() {
  const char* env = std::getenv("RNLS_OUTPUT_ROOT");
  return env && *env ? fs::path(env) : fs::path("runs");
}

void emit(const nlohmann::json& doc, const std::string& out) {
  if (out.empty()) {
    std::cout << doc.dump(2) << "\n";
  } else {
    write_json(out, doc);
  }
}

TimeWindow span(const SnapshotStream& s) {
  const double a = s.time(0), b = s.time(s.size() - 1);
  return {std::min(a, b), std::max(a, b)};
}

int simulate(const std::string& config_path, std::string out) {
  const auto config = load_config(config_path);
  const fs::path dir = out.empty() ? output_root() / fs::path(config_path).stem() : fs::path(out);
  const auto stream = evolve(config);
  write_run(dir, config, stream);
  std::cout << nlohmann::json{{"run", dir.string()},
                              {"snapshots", stream.size()},
                              {"t_end", stream.time(stream.size() - 1)},
                              {"max_tail_mass", std::ranges::max(stream.ledgers(), {}, &EnergyLedger::tail_mass).tail_mass}}
                   .dump()
            << "\n";
  return 0;
}

int verify(const std::string& run_dir, const std::string& suite_name, const std::string& out) {
  const auto suite = suite_from_string(suite_name);
  const auto run = read_run(run_dir);
  const auto checks = verify_suite(run.config, run.stream, suite);
  const bool ok = all_pass(checks);
  emit({{"run", run_dir}, {"suite", to_string(suite)}, {"pass", ok}, {"checks", to_json(checks)}}, out);
  if (!out.empty()) std::cout << (ok ? "PASS" : "FAIL") << "\n";
  return ok ? 0 : 1;
}

int bubbles(const std::string& run_dir, std::optional<double> eta1, std::optional<double> eta2,
            const std::string& out) {
  const auto run = read_run(run_dir);
  auto config = run.config;
  if (eta1) config.eta1 = *eta1;
  if (eta2) config.eta2 = *eta2;
  config.validate();
  const auto consts = AnalysisConstants::from_config(config);
  const auto part = partition_intervals(run.stream, span(run.stream), consts.eta1);
  const auto reports = analyze_intervals(run.stream, part.intervals, consts);

  nlohmann::json arr = nlohmann::json::array();
  std::size_t concentrating = 0;
  for (const auto& r : reports) {
    arr.push_back(to_json(r, consts));
    if (r.classification == BubbleClass::concentrating) ++concentrating;
  }
  emit({{"run", run_dir},
        {"constants", to_json(consts)},
        {"sub_threshold", part.sub_threshold},
        {"intervals", part.intervals.size()},
        {"concentrating", concentrating},
        {"reports", arr}},
       out);
  return 0;
}

int scatter(const std::string& run_dir, std::optional<double> eps, std::string out) {
  const auto run = read_run(run_dir);
  const auto& s = run.stream;
  const double e = eps.value_or(run.config.eps_small);
  if (!(e > 0.0)) fail(ErrorKind::config, "eps must be positive");
  const bool forward = s.dt() > 0.0;
  const double T0 = decay_horizon(s.ledger(0).E1, e);
  const auto samples = sample_times(s, forward ? T0 : -T0, 0.25);
  const auto res = forward ? extract_uplus(s, samples) : extract_uminus(s, samples);

  const fs::path dir = out.empty() ? fs::path(run_dir) / "scatter" : fs::path(out);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) fail(ErrorKind::io, "cannot create " + dir.string() + ": " + ec.message());
  const std::string name = forward ? "u_plus.csv" : "u_minus.csv";
  const auto csv = snapshot_csv(res.state);
  write_file(dir / name, csv);
  const nlohmann::json doc = {{"run", run_dir},
                              {"eps", e},
                              {"T0", T0},
                              {"direction", forward ? "forward" : "backward"},
                              {"scattered", res.scattered},
                              {"residual", res.residual},
                              {"trace", to_json(res.trace)},
                              {"state_file", name},
                              {"state_sha256", sha256_hex(csv)},
                              {"state_sigma_norm", sigma_norm(res.state)}};
  write_json(dir / "scatter.json", doc);
  std::cout << doc.dump(2) << "\n";
  return res.scattered ? 0 : 1;
}

struct SweepRow {
  std::string config;
  double eps = 0.0, amplitude = 0.0, t_end = 0.0, l10 = 0.0, mass_drift = 0.0, energy_drift = 0.0;
  double residual = NAN;
  bool scattered = false;
};

SweepRow sweep_one(const std::string& path) {
  const auto config = load_config(path);
  const auto s = evolve(config);
  SweepRow row;
  row.config = path;
  row.eps = std::sqrt(gradient_norm_sq(s.field(0)));
  row.amplitude = config.profile.amplitude;
  row.t_end = s.time(s.size() - 1);
  row.l10 = spacetime_norm(s, span(s), 10.0, 10.0);
  const auto& l0 = s.ledger(0);
  for (const auto& l : s.ledgers()) {
    row.mass_drift = std::max(row.mass_drift, l0.M > 0.0 ? std::abs(l.M - l0.M) / l0.M : std::abs(l.M));
    row.energy_drift =
        std::max(row.energy_drift, l0.E != 0.0 ? std::abs(l.E - l0.E) / std::abs(l0.E) : std::abs(l.E));
  }
  try {
    const auto sc = extract_uplus(s, sample_times(s, decay_horizon(l0.E1, config.eps_small), 0.25));
    row.residual = sc.residual;
    row.scattered = sc.scattered;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::range) throw;
  }
  return row;
}

std::vector<std::string> expand(const std::string& pattern) {
  glob_t g{};
  const int rc = ::glob(pattern.c_str(), 0, nullptr, &g);
  std::vector<std::string> out;
  if (rc == 0) out.assign(g.gl_pathv, g.gl_pathv + g.gl_pathc);
  globfree(&g);
  if (rc != 0 && rc != GLOB_NOMATCH) fail(ErrorKind::io, "glob failed for " + pattern);
  std::ranges::sort(out);
  return out;
}

int sweep(const std::string& pattern, const std::string& out) {
  const auto paths = expand(pattern);
  if (paths.empty()) fail(ErrorKind::io, "no config matches " + pattern);
  std::vector<std::future<SweepRow>> jobs;
  for (const auto& p : paths) jobs.push_back(std::async(std::launch::async, sweep_one, p));
  std::vector<SweepRow> rows;
  for (auto& j : jobs) rows.push_back(j.get());

  std::vector<double> xs, ys;
  for (const auto& r : rows) {
    if (r.eps > 0.0 && r.l10 > 0.0) {
      xs.push_back(r.eps);
      ys.push_back(r.l10);
    }
  }
  double slope = NAN;
  try {
    slope = fit_exponent(xs, ys);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::undefined) throw;
  }

  std::string csv = "config,eps,amplitude,t_end,l10,mass_drift,energy_drift,residual,scattered,fit_exponent\n";
  for (const auto& r : rows) {
    csv += r.config;
    for (double v : {r.eps, r.amplitude, r.t_end, r.l10, r.mass_drift, r.energy_drift, r.residual}) {
      csv += ',';
      csv += format_double(v);
    }
    csv += r.scattered ? ",true," : ",false,";
    csv += format_double(slope);
    csv += '\n';
  }
  if (out.empty()) {
    std::cout << csv;
  } else {
    write_file(out, csv);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Radial defocusing quintic NLS with harmonic potential"};
  app.require_subcommand(1);
  app.fallthrough();
  bool seedless = false;
  app.add_flag("--seedless", seedless, "Deterministic mode (always on; accepted for compatibility)");

  std::string config_path, out, run_dir, suite = "all", pattern;
  std::optional<double> eta1, eta2, eps;

  auto* sim = app.add_subcommand("simulate", "Evolve a config and write a run directory");
  sim->add_option("config_pos", config_path, "Config file")->check(CLI::ExistingFile);
  sim->add_option("--config", config_path, "Config file")->check(CLI::ExistingFile);
  sim->add_option("--out", out, "Run directory (default $RNLS_OUTPUT_ROOT/<config stem>)");

  auto* ver = app.add_subcommand("verify", "Check invariants of a run");
  ver->add_option("run_dir", run_dir)->required();
  ver->add_option("--suite", suite)->check(CLI::IsMember({"conservation", "decay", "morawetz", "galilean", "all"}));
  ver->add_option("--out", out, "Report file (default stdout)");

  auto* bub = app.add_subcommand("bubbles", "Bubble reports per interval");
  bub->add_option("run_dir", run_dir)->required();
  bub->add_option("--eta1", eta1);
  bub->add_option("--eta2", eta2);
  bub->add_option("--out", out, "Report file (default stdout)");

  auto* sca = app.add_subcommand("scatter", "Extract the asymptotic state");
  sca->add_option("run_dir", run_dir)->required();
  sca->add_option("--eps", eps, "Smallness for the decay horizon (default config eps_small)");
  sca->add_option("--out", out, "Output directory (default <run_dir>/scatter)");

  auto* swp = app.add_subcommand("sweep", "Simulate every matching config and aggregate");
  swp->add_option("pattern", pattern, "Config glob")->required();
  swp->add_option("--out", out, "CSV file (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*sim) {
      if (config_path.empty()) fail(ErrorKind::config, "simulate needs a config");
      return simulate(config_path, out);
    }
    if (*ver) return verify(run_dir, suite, out);
    if (*bub) return bubbles(run_dir, eta1, eta2, out);
    if (*sca) return scatter(run_dir, eps, out);
    if (*swp) return sweep(pattern, out);
  } catch (const Error& e) {
    report_error(to_string(e.kind()), e.what());
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    report_error("internal", e.what());
    return 70;
  }
  return 70;
}
