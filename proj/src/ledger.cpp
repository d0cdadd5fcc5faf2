#include "rnls/ledger.hpp"

#include <cmath>
#include <numbers>

#include "rnls/norms.hpp"
#include "rnls/sine_transform.hpp"

namespace rnls {

namespace {

// 2 Re <r w, i (w_r - w/r)> = -2 * 4 pi int r Im(conj(w) w_r) dr
double cross_term(const RadialField& field) {
  const auto& grid = field.grid();
  const auto dw = radial_derivative(field);
  double sum = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    sum += trapezoid_weight(grid, i) * grid.radius(i) * std::imag(std::conj(field[i]) * dw[i + 1]);
  }
  return -2.0 * 4.0 * std::numbers::pi * sum;
}

}  // namespace

double EnergyLedger::J_norm_sq() const noexcept {
  const double sh = std::sinh(t);
  const double ch = std::cosh(t);
  return sh * sh * moment2 + ch * ch * grad2 + sh * ch * cross;
}

double EnergyLedger::H_norm_sq() const noexcept {
  const double sh = std::sinh(t);
  const double ch = std::cosh(t);
  return ch * ch * moment2 + sh * sh * grad2 + sh * ch * cross;
}

EnergyLedger ledger(const RadialField& field) {
  EnergyLedger l;
  l.t = field.time();
  l.M = std::sqrt(mass_squared(field));
  l.grad2 = gradient_norm_sq(field);
  l.moment2 = second_moment_squared(field);
  l.cross = cross_term(field);
  l.pot6 = lp_integral(field, 6.0);
  l.L10 = lp_norm(field, 10.0);
  l.tail_mass = tail_mass_fraction(field);
  l.E1 = 0.5 * l.grad2 + l.pot6 / 3.0;
  l.E2 = 0.5 * l.moment2;
  l.E = l.E1 - l.E2;
  const double sh = std::sinh(l.t);
  const double ch = std::cosh(l.t);
  l.calE1 = 0.5 * l.J_norm_sq() + ch * ch * l.pot6 / 3.0;
  l.calE2 = 0.5 * l.H_norm_sq() + sh * sh * l.pot6 / 3.0;
  return l;
}

}  // namespace rnls
