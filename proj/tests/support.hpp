#pragma once

#include <array>
#include <cmath>
#include <numbers>
#include <utility>
#include <vector>

#include "rnls/field.hpp"
#include "rnls/grid.hpp"
#include "rnls/profile.hpp"

namespace rnls::test {

inline constexpr double pi = std::numbers::pi;

inline GridPtr default_grid() { return make_grid(16.0, 1024); }

inline RadialField gaussian(const GridPtr& grid, double amplitude = 1.0, double width = 1.0) {
  return sample_profile(ProfileSpec::gaussian(amplitude, width), grid);
}

inline double rel_err(double a, double b) { return std::abs(a - b) / std::abs(b); }

// Closed forms for u = exp(-r^2/2) in R^3.
inline const double gauss_mass_sq = std::pow(pi, 1.5);
inline const double gauss_grad_sq = 1.5 * std::pow(pi, 1.5);
inline const double gauss_moment_sq = 1.5 * std::pow(pi, 1.5);
inline const double gauss_pot6 = std::pow(pi / 3.0, 1.5);

// int_0^a s^2 exp(-c s^2) ds
inline double gaussian_moment2(double c, double a) {
  const double sc = std::sqrt(c);
  return std::sqrt(pi) / (4.0 * c * sc) * std::erf(sc * a) - a * std::exp(-c * a * a) / (2.0 * c);
}

// u(t) = A exp(-B r^2 / 2) with B' = -i(1 + B^2), A' = -(3i/2) B A, A(0) = B(0) = 1,
// integrated by classical RK4.
inline std::pair<Complex, Complex> gaussian_ode(double t, int steps = 20000) {
  auto rhs = [](const std::array<Complex, 2>& y) {
    return std::array<Complex, 2>{Complex(0.0, -1.5) * y[1] * y[0], Complex(0.0, -1.0) * (1.0 + y[1] * y[1])};
  };
  std::array<Complex, 2> y{1.0, 1.0};
  const double h = t / steps;
  auto axpy = [](const std::array<Complex, 2>& a, double c, const std::array<Complex, 2>& b) {
    return std::array<Complex, 2>{a[0] + c * b[0], a[1] + c * b[1]};
  };
  for (int s = 0; s < steps; ++s) {
    const auto k1 = rhs(y);
    const auto k2 = rhs(axpy(y, h / 2, k1));
    const auto k3 = rhs(axpy(y, h / 2, k2));
    const auto k4 = rhs(axpy(y, h, k3));
    for (int c = 0; c < 2; ++c) y[c] += h / 6 * (k1[c] + 2.0 * k2[c] + 2.0 * k3[c] + k4[c]);
  }
  return {y[0], y[1]};
}

inline RadialField gaussian_exact(const GridPtr& g, double t) {
  const auto [a, b] = gaussian_ode(t);
  std::vector<Complex> w(g->size());
  for (std::size_t i = 0; i < g->size(); ++i) {
    const double r = g->radius(i);
    w[i] = r * a * std::exp(-b * r * r / 2.0);
  }
  return RadialField(g, std::move(w), t);
}

}  // namespace rnls::test
