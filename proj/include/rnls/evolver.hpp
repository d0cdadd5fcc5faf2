#pragma once

#include <optional>

#include "rnls/config.hpp"
#include "rnls/linear_flow.hpp"
#include "rnls/stream.hpp"

namespace rnls {

/// Largest accepted |dt| on a grid: 32 dr^2.
double dt_max(const RadialGrid& grid) noexcept;

/// One step of i u_t = -1/2 Lap u - 1/2 |x|^2 u + |u|^4 u:
///   w <- e^{i(a r^2/2 - dt/2 |u|^4)} w,  kinetic factor in sine space,
///   w <- e^{i(a r^2/2 - dt/2 |u|^4)} w  (|u| recomputed),
/// with a and the kinetic phase taken from the linear plan of the splitting.
class NonlinearStepper {
 public:
  NonlinearStepper(GridPtr grid, double dt, Splitting splitting = Splitting::exact_linear);

  const PropagatorPlan& plan() const noexcept { return plan_; }
  void advance(std::span<Complex> w, std::span<Complex> scratch) const;

 private:
  void physical(std::span<Complex> w) const;

  PropagatorPlan plan_;
  std::vector<double> r2_;
  std::vector<double> inv_r2_;
};

/// Single step. Throws ErrorKind::config when |dt| > dt_max and TruncationError
/// when the result breaches the tail threshold.
RadialField step(const RadialField& field, double dt, Splitting splitting = Splitting::exact_linear,
                 double tail_threshold = 1e-6);

struct EvolveOptions {
  double dt = 1e-3;        // positive; the sign of duration sets the direction
  double duration = 0.0;   // signed; must be a whole number of steps
  std::size_t stride = 10; // must divide the number of steps
  double tail_threshold = 1e-6;
  Splitting splitting = Splitting::exact_linear;
};

/// Snapshots every stride steps from initial.time() to initial.time() + duration.
/// Snapshot times are initial.time() + step * dt exactly.
SnapshotStream evolve(const RadialField& initial, const EvolveOptions& options);

/// Samples the configured profile and evolves to t_end (or -t_end when backward).
SnapshotStream evolve(const RunConfig& config, bool backward = false);

/// log2(||u_h - u_{h/2}|| / ||u_{h/2} - u_{h/4}||) at t_end with h = config.dt.
/// Empty when the differences vanish (e.g. zero data).
std::optional<double> convergence_order(const RunConfig& config);

}  // namespace rnls
