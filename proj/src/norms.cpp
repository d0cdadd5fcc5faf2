#include "rnls/norms.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "rnls/error.hpp"
#include "rnls/sine_transform.hpp"

namespace rnls {

namespace {

constexpr double four_pi = 4.0 * std::numbers::pi;

void require_radius(const RadialGrid& grid, double radius) {
  if (!(radius >= 0.0) || radius > grid.r_max() * (1.0 + 1e-12)) {
    fail(ErrorKind::range, "ball radius " + std::to_string(radius) + " outside [0, r_max]");
  }
}

// |u|^p r^2 at the grid radii.
std::vector<double> lp_integrand(const RadialField& field, double p) {
  const auto& grid = field.grid();
  std::vector<double> f(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double r = grid.radius(i);
    f[i] = std::pow(std::abs(field[i]) / r, p) * r * r;
  }
  return f;
}

}  // namespace

double integrate_to_radius(const RadialGrid& grid, std::span<const double> f, double radius) {
  const double dr = grid.dr();
  const double cells = radius / dr;
  const auto full = static_cast<std::size_t>(std::floor(cells));
  double sum = 0.0;
  double left = 0.0;  // f(0) = 0
  for (std::size_t c = 0; c < full && c < grid.size(); ++c) {
    sum += 0.5 * dr * (left + f[c]);
    left = f[c];
  }
  if (full < grid.size()) {
    const double frac = cells - static_cast<double>(full);
    if (frac > 0.0) {
      const double right = left + frac * (f[full] - left);
      sum += 0.5 * frac * dr * (left + right);
    }
  }
  return sum;
}

double mass_squared(const RadialField& field) {
  const auto& grid = field.grid();
  double sum = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) sum += trapezoid_weight(grid, i) * std::norm(field[i]);
  return four_pi * sum;
}

double second_moment_squared(const RadialField& field) {
  const auto& grid = field.grid();
  double sum = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double r = grid.radius(i);
    sum += trapezoid_weight(grid, i) * r * r * std::norm(field[i]);
  }
  return four_pi * sum;
}

double lp_norm(const RadialField& field, double p) {
  if (!(p >= 1.0)) fail(ErrorKind::range, "L^p exponent must satisfy p >= 1");
  const auto& grid = field.grid();
  if (std::isinf(p)) {
    double peak = std::abs(origin_value(field));
    for (std::size_t i = 0; i < grid.size(); ++i) peak = std::max(peak, std::abs(field[i]) / grid.radius(i));
    return peak;
  }
  if (p == 2.0) return std::sqrt(mass_squared(field));
  return std::pow(lp_integral(field, p), 1.0 / p);
}

double lp_integral(const RadialField& field, double p) {
  if (!(p >= 1.0) || std::isinf(p)) fail(ErrorKind::range, "lp_integral needs finite p >= 1");
  const auto& grid = field.grid();
  double sum = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double r = grid.radius(i);
    const double a = std::abs(field[i]);
    if (a == 0.0) continue;
    sum += trapezoid_weight(grid, i) * std::pow(a / r, p) * r * r;
  }
  return four_pi * sum;
}

double sigma_norm(const RadialField& field) {
  const double h1 = std::sqrt(mass_squared(field) + gradient_norm_sq(field));
  return h1 + std::sqrt(second_moment_squared(field));
}

double tail_mass_fraction(const RadialField& field, double fraction) {
  const auto& grid = field.grid();
  const double edge = fraction * grid.r_max();
  double total = 0.0;
  double tail = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double m = trapezoid_weight(grid, i) * std::norm(field[i]);
    total += m;
    if (grid.radius(i) > edge) tail += m;
  }
  return total > 0.0 ? tail / total : 0.0;
}

double ball_lp_norm(const RadialField& field, double p, double radius) {
  if (!(p >= 1.0) || std::isinf(p)) fail(ErrorKind::range, "ball norms need finite p >= 1");
  require_radius(field.grid(), radius);
  const auto f = lp_integrand(field, p);
  return std::pow(four_pi * integrate_to_radius(field.grid(), f, radius), 1.0 / p);
}

double annulus_lp_norm(const RadialField& field, double p, double inner, double outer) {
  if (!(p >= 1.0) || std::isinf(p)) fail(ErrorKind::range, "annulus norms need finite p >= 1");
  if (!(inner <= outer)) fail(ErrorKind::range, "annulus inner radius exceeds outer radius");
  require_radius(field.grid(), outer);
  const auto f = lp_integrand(field, p);
  const double value = integrate_to_radius(field.grid(), f, outer) - integrate_to_radius(field.grid(), f, inner);
  return std::pow(four_pi * std::max(value, 0.0), 1.0 / p);
}

double ball_gradient_norm(const RadialField& field, double radius) {
  const auto& grid = field.grid();
  require_radius(grid, radius);
  const auto dw = radial_derivative(field);
  std::vector<double> f(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    // r u_r = w_r - w / r, and |grad u|^2 r^2 = |r u_r|^2
    f[i] = std::norm(dw[i + 1] - field[i] / grid.radius(i));
  }
  return std::sqrt(four_pi * integrate_to_radius(grid, f, radius));
}

}  // namespace rnls
