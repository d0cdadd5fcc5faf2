#pragma once

#include <span>
#include <vector>

#include "rnls/stream.hpp"

namespace rnls {

struct TimeWindow {
  double begin = 0.0;
  double end = 0.0;
  double length() const noexcept { return end - begin; }
};

struct SeriesPoint {
  double t = 0.0;
  double value = 0.0;
};

/// Integral over window of the piecewise-linear interpolant of (times, values).
/// times must be monotone; the window must lie inside their range.
double integrate_series(std::span<const double> times, std::span<const double> values, TimeWindow window);

/// 3 E1(0) cosh^{-6} t - ||u(t)||_6^6 at every snapshot. The stream must start at t = 0.
std::vector<SeriesPoint> decay_margin(const SnapshotStream& stream);

struct IdentityAudit {
  /// Centered differences of calE1, calE2 minus -2/3 sinh(2t) ||u||_6^6, over E1(0).
  std::vector<SeriesPoint> residual1;
  std::vector<SeriesPoint> residual2;
  double max_residual = 0.0;
  /// Largest increase of calE1, calE2 between consecutive snapshots moving
  /// away from t = 0, over E1(0). Monotone decay means both are <= slack.
  double calE1_max_rise = 0.0;
  double calE2_max_rise = 0.0;
  bool monotone = true;
  /// max_t ||H(t)u(t)||_2 / ||x u0||_2.
  double h_bound_ratio = 0.0;
};

/// Audits dcalE1/dt = dcalE2/dt = -2/3 sinh(2t) ||u||_6^6 on a stream that
/// starts at t = 0. Needs at least three snapshots.
IdentityAudit energy_identity_residual(const SnapshotStream& stream, double slack = 1e-8);

/// (int chi^2(|x|/R) |u|^2 dx)^{1/2}, chi = local_mass_weight. R in (0, r_max/2].
double local_mass(const RadialField& field, double R);

struct LocalMassAudit {
  double hardy_ratio = 0.0;      // max_t local_mass / (R ||u||_H1dot)
  double lipschitz_ratio = 0.0;  // max |d/dt local_mass| / (||u||_H1dot / R), finite differences
};

LocalMassAudit local_mass_audit(const SnapshotStream& stream, double R);

struct MorawetzResult {
  double lhs = 0.0;       // int_I int_{|x| <= A|I|^{1/2}} |u|^6 / |x| dx dt
  double envelope = 0.0;  // A|I|^{1/2} sup_I (||grad u||^2 + ||x u||^2 + ||u||_6^6)
  double ratio = 0.0;
};

MorawetzResult morawetz(const SnapshotStream& stream, TimeWindow window, double A);

/// (int_I ||u(t)||_r^q dt)^{1/q}, trapezoid over snapshots.
double spacetime_norm(const SnapshotStream& stream, TimeWindow window, double q, double r);

struct Interval {
  double begin = 0.0;
  double end = 0.0;
  double norm = 0.0;       // L^10(I; L^10)
  bool overshoot = false;  // one snapshot step pushed the norm past 2 eta1
  double length() const noexcept { return end - begin; }
};

struct IntervalPartition {
  double eta1 = 0.0;
  std::vector<Interval> intervals;
  bool sub_threshold = false;  // total norm below eta1: a single interval
};

/// Greedy left-to-right split: each interval closes at the first snapshot where
/// its L^10 space-time norm reaches eta1. norms holds ||u(t_k)||_10.
IntervalPartition partition_intervals(std::span<const double> times, std::span<const double> norms, TimeWindow window,
                                      double eta1);
IntervalPartition partition_intervals(const SnapshotStream& stream, TimeWindow window, double eta1);

struct IntervalSum {
  double sum = 0.0;    // sum_j |I_j|^{1/2}
  double ratio = 0.0;  // sum / |I|^{1/2}
};

IntervalSum morawetz_interval_sum(std::span<const Interval> intervals, TimeWindow window);

/// T0 with 3 E1(0) cosh^{-6} T0 = eps^6, clamped at 0.
double decay_horizon(double E1_0, double eps);

}  // namespace rnls
