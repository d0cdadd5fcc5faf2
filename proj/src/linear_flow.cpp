#include "rnls/linear_flow.hpp"

#include <cmath>

#include "rnls/error.hpp"
#include "rnls/norms.hpp"
#include "rnls/sine_transform.hpp"

namespace rnls {

PropagatorPlan::PropagatorPlan(GridPtr grid, double dt, Splitting splitting)
    : grid_(std::move(grid)), dt_(dt), splitting_(splitting) {
  if (!std::isfinite(dt) || dt == 0.0) fail(ErrorKind::config, "propagator step must be finite and nonzero");
  const bool exact = splitting == Splitting::exact_linear;
  a_ = exact ? std::tanh(dt / 2.0) : dt / 2.0;
  const double b = exact ? std::sinh(dt) : dt;
  const std::size_t n = grid_->size();
  potential_.resize(n);
  kinetic_.resize(n);
  norm_ = 1.0 / (2.0 * static_cast<double>(n));
  for (std::size_t i = 0; i < n; ++i) {
    const double r = grid_->radius(i);
    const double k = grid_->wavenumber(i);
    potential_[i] = std::polar(1.0, a_ * r * r / 2.0);
    kinetic_[i] = std::polar(1.0, -b * k * k / 2.0);
  }
}

void PropagatorPlan::kinetic(std::span<Complex> w, std::span<Complex> scratch) const {
  sine_transform_raw(w, scratch);
  for (std::size_t m = 0; m < scratch.size(); ++m) scratch[m] *= norm_ * kinetic_[m];
  sine_transform_raw(scratch, w);
}

void PropagatorPlan::step(std::span<Complex> w, std::span<Complex> scratch) const {
  for (std::size_t i = 0; i < w.size(); ++i) w[i] *= potential_[i];
  kinetic(w, scratch);
  for (std::size_t i = 0; i < w.size(); ++i) w[i] *= potential_[i];
}

RadialField linear_flow(const RadialField& field, double t, double dt, Splitting splitting, double tail_threshold) {
  if (!(dt > 0.0)) fail(ErrorKind::config, "linear_flow needs dt > 0");
  if (!std::isfinite(t)) fail(ErrorKind::config, "linear_flow needs a finite time");
  RadialField out = field;
  out.set_time(field.time() + t);
  if (t == 0.0 || field.is_zero()) return out;

  const double span = std::abs(t);
  const double sign = t > 0.0 ? 1.0 : -1.0;
  auto full = static_cast<std::size_t>(std::floor(span / dt));
  double rest = span - static_cast<double>(full) * dt;
  if (rest <= 1e-12 * dt) rest = 0.0;
  if (dt - rest <= 1e-12 * dt) {
    ++full;
    rest = 0.0;
  }

  std::vector<Complex> scratch(field.size());
  auto w = out.values();
  auto guard = [&](double elapsed) {
    const double tail = tail_mass_fraction(out);
    if (tail > tail_threshold) throw TruncationError(field.time() + sign * elapsed, tail, tail_threshold);
  };
  const PropagatorPlan plan(field.grid_ptr(), sign * dt, splitting);
  for (std::size_t s = 0; s < full; ++s) {
    plan.step(w, scratch);
    guard(static_cast<double>(s + 1) * dt);
  }
  if (rest > 0.0) {
    const PropagatorPlan last(field.grid_ptr(), sign * rest, splitting);
    last.step(w, scratch);
    guard(span);
  }
  return out;
}

}  // namespace rnls
