#include "rnls/galilean.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "rnls/error.hpp"
#include "rnls/linear_flow.hpp"
#include "rnls/mehler.hpp"
#include "rnls/norms.hpp"
#include "rnls/sine_transform.hpp"

namespace rnls {

namespace {

using namespace std::complex_literals;

// r v = position * r w + i * gradient * (w_r - w / r)
RadialField combine(const RadialField& field, double position, double gradient) {
  const auto& grid = field.grid();
  const auto dw = radial_derivative(field);
  std::vector<Complex> g(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double r = grid.radius(i);
    g[i] = position * r * field[i] + 1i * gradient * (dw[i + 1] - field[i] / r);
  }
  return RadialField(field.grid_ptr(), std::move(g), field.time());
}

RadialField factorized(const RadialField& field, double chirp, double gradient) {
  const auto& grid = field.grid();
  std::vector<Complex> z(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double r = grid.radius(i);
    z[i] = std::polar(1.0, -chirp * r * r / 2.0) * field[i];
  }
  const RadialField zf(field.grid_ptr(), std::move(z), field.time());
  const auto dz = radial_derivative(zf);
  std::vector<Complex> g(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double r = grid.radius(i);
    g[i] = 1i * gradient * std::polar(1.0, chirp * r * r / 2.0) * (dz[i + 1] - zf[i] / r);
  }
  return RadialField(field.grid_ptr(), std::move(g), field.time());
}

}  // namespace

RadialField galilean_apply(const RadialField& field, double t, Galilean which, GalileanMethod method) {
  const double sh = std::sinh(t);
  const double ch = std::cosh(t);
  if (method == GalileanMethod::direct) {
    return which == Galilean::J ? combine(field, sh, ch) : combine(field, ch, sh);
  }
  if (which == Galilean::J) return factorized(field, std::tanh(t), ch);
  if (t == 0.0) fail(ErrorKind::range, "factorized H(t) is singular at t = 0");
  return factorized(field, ch / sh, sh);
}

double heisenberg_residual(const RadialField& u0, double t, double dt, Galilean which, Splitting splitting) {
  const auto g0 = galilean_apply(u0, 0.0, which);
  const double scale = std::sqrt(mass_squared(g0));
  if (!(scale > 0.0)) fail(ErrorKind::undefined, "Heisenberg residual of a field with G(0)u0 = 0");
  if (t == 0.0) return 0.0;
  const auto lhs = galilean_apply(linear_flow(u0, t, dt, splitting), t, which);
  const auto rhs = mehler_apply_vector(g0, t);
  return std::sqrt(mass_squared(lhs - rhs)) / scale;
}

double embedding_ratio(const RadialField& field, double t, double p_out, double p_in) {
  const bool admissible = (p_out == 10.0 && std::abs(p_in - 30.0 / 13.0) < 1e-12) ||
                          (p_out == 18.0 && std::abs(p_in - 18.0 / 7.0) < 1e-12);
  if (!admissible) fail(ErrorKind::range, "embedding pair must be (10, 30/13) or (18, 18/7)");
  const double denom = lp_norm(galilean_apply(field, t, Galilean::J), p_in);
  if (!(denom > 0.0)) fail(ErrorKind::undefined, "J(t) f vanishes");
  return lp_norm(field, p_out) / denom;
}

DispersiveRatio dispersive_ratio(const RadialField& u0, double t) {
  const double l1 = lp_norm(u0, 1.0);
  if (!(l1 > 0.0)) fail(ErrorKind::undefined, "dispersive ratio of the zero field");
  const auto out = mehler_apply(u0, t);
  double peak = std::abs(mehler_origin_value(u0, t));
  for (std::size_t i = 0; i < out.size(); ++i) peak = std::max(peak, std::abs(out[i]) / out.grid().radius(i));
  const double at = std::abs(t);
  return {peak * std::pow(at, 1.5) / l1,
          peak * std::pow(2.0 * std::numbers::pi * std::abs(std::sinh(t)), 1.5) / l1};
}

}  // namespace rnls
