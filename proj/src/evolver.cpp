#include "rnls/evolver.hpp"

#include <cmath>
#include <string>

#include "rnls/error.hpp"
#include "rnls/norms.hpp"
#include "rnls/profile.hpp"

namespace rnls {

double dt_max(const RadialGrid& grid) noexcept { return 32.0 * grid.dr() * grid.dr(); }

namespace {

void require_step(const RadialGrid& grid, double dt) {
  if (!(std::abs(dt) <= dt_max(grid)) || dt == 0.0) {
    fail(ErrorKind::config,
         "time step " + std::to_string(dt) + " outside (0, dt_max = " + std::to_string(dt_max(grid)) + "]");
  }
}

}  // namespace

NonlinearStepper::NonlinearStepper(GridPtr grid, double dt, Splitting splitting)
    : plan_(std::move(grid), dt, splitting) {
  const auto& g = plan_.grid();
  r2_.resize(g.size());
  inv_r2_.resize(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double r = g.radius(i);
    r2_[i] = r * r;
    inv_r2_[i] = 1.0 / (r * r);
  }
}

void NonlinearStepper::physical(std::span<Complex> w) const {
  const double a = plan_.potential_coefficient() / 2.0;
  const double h = plan_.dt() / 2.0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const double u2 = std::norm(w[i]) * inv_r2_[i];
    w[i] *= std::polar(1.0, a * r2_[i] - h * u2 * u2);
  }
}

void NonlinearStepper::advance(std::span<Complex> w, std::span<Complex> scratch) const {
  physical(w);
  plan_.kinetic(w, scratch);
  physical(w);
}

RadialField step(const RadialField& field, double dt, Splitting splitting, double tail_threshold) {
  require_step(field.grid(), dt);
  const NonlinearStepper stepper(field.grid_ptr(), dt, splitting);
  RadialField out = field;
  std::vector<Complex> scratch(field.size());
  stepper.advance(out.values(), scratch);
  out.set_time(field.time() + dt);
  const double tail = tail_mass_fraction(out);
  if (tail > tail_threshold) throw TruncationError(out.time(), tail, tail_threshold);
  return out;
}

SnapshotStream evolve(const RadialField& initial, const EvolveOptions& options) {
  if (!(options.dt > 0.0)) fail(ErrorKind::config, "evolve needs dt > 0");
  if (options.stride == 0) fail(ErrorKind::config, "snapshot stride must be >= 1");
  const double ratio = std::abs(options.duration) / options.dt;
  const auto steps = static_cast<std::size_t>(std::llround(ratio));
  if (std::abs(ratio - static_cast<double>(steps)) > 1e-9 * std::max(1.0, ratio)) {
    fail(ErrorKind::config, "evolution span must be a whole number of steps");
  }
  if (steps % options.stride != 0) fail(ErrorKind::config, "step count must be a multiple of the snapshot stride");

  const double dt = options.duration < 0.0 ? -options.dt : options.dt;
  require_step(initial.grid(), dt);
  const double t0 = initial.time();

  SnapshotStream stream(dt, options.stride);
  RadialField current = initial;
  {
    const double tail = tail_mass_fraction(current);
    if (tail > options.tail_threshold) throw TruncationError(t0, tail, options.tail_threshold);
  }
  stream.push(current, 0);
  if (steps == 0) return stream;

  const NonlinearStepper stepper(initial.grid_ptr(), dt, options.splitting);
  std::vector<Complex> scratch(initial.size());
  auto w = current.values();
  for (std::size_t s = 1; s <= steps; ++s) {
    stepper.advance(w, scratch);
    const double t = t0 + static_cast<double>(s) * dt;
    const double tail = tail_mass_fraction(current);
    if (tail > options.tail_threshold) throw TruncationError(t, tail, options.tail_threshold);
    if (s % options.stride == 0) {
      current.set_time(t);
      stream.push(current, s);
    }
  }
  return stream;
}

SnapshotStream evolve(const RunConfig& config, bool backward) {
  config.validate();
  const auto grid = make_grid(config.r_max, config.n);
  const auto initial = sample_profile(config.profile, grid, config.tail_mass_threshold);
  EvolveOptions options;
  options.dt = config.dt;
  options.duration = backward ? -config.t_end : config.t_end;
  options.stride = config.snapshot_stride;
  options.tail_threshold = config.tail_mass_threshold;
  options.splitting = config.splitting;
  return evolve(initial, options);
}

std::optional<double> convergence_order(const RunConfig& config) {
  config.validate();
  const auto grid = make_grid(config.r_max, config.n);
  const auto initial = sample_profile(config.profile, grid, config.tail_mass_threshold);
  auto final_state = [&](double dt) {
    EvolveOptions options;
    options.dt = dt;
    options.duration = config.t_end;
    options.stride = static_cast<std::size_t>(std::llround(config.t_end / dt));
    if (options.stride == 0) options.stride = 1;
    options.tail_threshold = config.tail_mass_threshold;
    options.splitting = config.splitting;
    auto stream = evolve(initial, options);
    return stream.field(stream.size() - 1);
  };
  const auto h1 = final_state(config.dt);
  const auto h2 = final_state(config.dt / 2.0);
  const auto h4 = final_state(config.dt / 4.0);
  const double coarse = std::sqrt(mass_squared(h1 - h2));
  const double fine = std::sqrt(mass_squared(h2 - h4));
  if (!(coarse > 0.0) || !(fine > 0.0)) return std::nullopt;
  const double order = std::log2(coarse / fine);
  if (!std::isfinite(order)) fail(ErrorKind::undefined, "non-finite convergence order");
  return order;
}

}  // namespace rnls
