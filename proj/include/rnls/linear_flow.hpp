#pragma once

#include <vector>

#include "rnls/config.hpp"
#include "rnls/field.hpp"

namespace rnls {

/// Phase tables for one step of the quadratic part of the equation,
///   w <- P * S^{-1}[K * S[P * w]],
/// with P = e^{i a r^2/2}, K = e^{-i b k^2/2} and S the unnormalized sine
/// transform (its 1/(2n) is applied alongside K). Strang uses a = dt/2, b = dt; exact_linear uses
/// a = tanh(dt/2), b = sinh(dt), which reproduces the exact flow.
class PropagatorPlan {
 public:
  PropagatorPlan(GridPtr grid, double dt, Splitting splitting = Splitting::strang);

  const RadialGrid& grid() const noexcept { return *grid_; }
  const GridPtr& grid_ptr() const noexcept { return grid_; }
  double dt() const noexcept { return dt_; }
  Splitting splitting() const noexcept { return splitting_; }
  /// Coefficient a of the potential half-phase r^2/2.
  double potential_coefficient() const noexcept { return a_; }

  std::span<const Complex> potential_phase() const noexcept { return potential_; }
  std::span<const Complex> kinetic_phase() const noexcept { return kinetic_; }

  /// One full linear step in place. scratch must have the grid length.
  void step(std::span<Complex> w, std::span<Complex> scratch) const;
  /// Kinetic factor only, in place.
  void kinetic(std::span<Complex> w, std::span<Complex> scratch) const;

 private:
  GridPtr grid_;
  double dt_;
  Splitting splitting_;
  double a_;
  double norm_;
  std::vector<Complex> potential_;
  std::vector<Complex> kinetic_;
};

/// U(t) by repeated steps of size dt (negative t steps backward). A final
/// partial step covers any remainder of |t| / dt. Throws TruncationError when
/// the mass fraction beyond 0.9 r_max exceeds tail_threshold after a step.
RadialField linear_flow(const RadialField& field, double t, double dt, Splitting splitting = Splitting::strang,
                        double tail_threshold = 1e-6);

}  // namespace rnls
