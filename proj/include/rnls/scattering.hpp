#pragma once

#include <vector>

#include <json.hpp>

#include "rnls/config.hpp"
#include "rnls/stream.hpp"

namespace rnls {

/// U(-t)u(t): a state in the time-0 picture plus the time it was pulled back from.
struct InteractionState {
  RadialField state;
  double source_time = 0.0;
};

/// Applies the exact-linear flow for -field.time() in steps of |dt|.
/// The result carries time 0. Errors propagate from linear_flow.
InteractionState pullback(const RadialField& field, double dt, double tail_threshold = 1e-6);

struct CauchyTrace {
  std::vector<double> times;  // sample times t_k
  std::vector<double> d;      // ||U(-t_{k+1})u(t_{k+1}) - U(-t_k)u(t_k)||_Sigma
  bool monotone = false;      // d non-increasing
  bool ratio_test = false;    // d_{k+1} / d_k < 0.9 over the last five ratios
  bool below_floor = false;   // every d_k <= floor
  double floor = 0.0;
  bool converged = false;     // below_floor, or monotone and ratio_test
  double final_residual() const { return d.empty() ? 0.0 : d.back(); }
};

inline constexpr double cauchy_floor = 1e-8;

/// Pulls back the snapshots at the given times (each must match a snapshot)
/// and measures consecutive Sigma distances. Throws ErrorKind::range for fewer
/// than two samples or a time without a snapshot.
CauchyTrace cauchy_trace(const SnapshotStream& stream, const std::vector<double>& sample_times,
                         double floor = cauchy_floor);

/// Snapshot times from begin to the end of the stream spaced by about spacing
/// (rounded to whole snapshot strides). Works for either time direction.
std::vector<double> sample_times(const SnapshotStream& stream, double begin, double spacing);

struct ScatteringState {
  bool scattered = false;
  RadialField state;      // last pullback
  double residual = 0.0;  // final d_k
  CauchyTrace trace;
};

/// u_+ from a forward stream (times >= 0) and u_- from a backward one (times <= 0).
/// A non-convergent trace gives scattered = false with the candidate still filled in.
ScatteringState extract_uplus(const SnapshotStream& stream, const std::vector<double>& sample_times);
ScatteringState extract_uminus(const SnapshotStream& stream, const std::vector<double>& sample_times);

struct SmallDataRun {
  double eps = 0.0;
  double amplitude = 0.0;
  double horizon = 0.0;  // decay_horizon(E1(0), eps_small)
  double t_end = 0.0;
  double l10 = 0.0;      // ||u||_{L^10([0, t_end]; L^10)}
  double mass_drift = 0.0;  // | ||u_+||_2 - ||u_0||_2 | / ||u_0||_2
  ScatteringState scattering;
  RadialField initial;
};

struct SmallDataReport {
  std::vector<SmallDataRun> runs;
  double fit_exponent = 0.0;  // least-squares slope of log l10 against log eps
  bool exponent_ok = false;   // fit_exponent in [0.9, 1.1]
  double max_residual = 0.0;
};

/// For each eps, rescales config.profile so ||grad u0||_2 = eps, evolves to
/// t_end = decay_horizon(E1(0), config.eps_small) + 2 (rounded up to whole
/// strides), and extracts u_+ with samples spaced by sample_spacing. Runs are
/// concurrent. Zero eps yields a zero run and is left out of the fit.
SmallDataReport small_data_experiment(const RunConfig& config, const std::vector<double>& eps_grid,
                                      double sample_spacing = 0.25);

/// Least-squares slope of log y against log x over entries with x, y > 0.
double fit_exponent(const std::vector<double>& x, const std::vector<double>& y);

nlohmann::json to_json(const CauchyTrace& trace);
nlohmann::json to_json(const SmallDataReport& report);

}  // namespace rnls
