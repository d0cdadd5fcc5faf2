#include "rnls/mehler.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "rnls/error.hpp"
#include "rnls/norms.hpp"

namespace rnls {

namespace {

using namespace std::complex_literals;

struct Kernel {
  double alpha;  // cosh t / (2 sinh t)
  double beta;   // 1 / sinh t
  Complex pref;  // e^{-i pi/4 sgn t} |2 pi sinh t|^{-1/2}
};

Kernel kernel(const RadialGrid& grid, double t, double t_min) {
  const double floor = mehler_resolution_floor(grid, t_min);
  if (!(std::abs(t) >= floor)) {
    fail(ErrorKind::kernel_resolution,
         "Mehler quadrature needs |t| >= " + std::to_string(floor) + ", got " + std::to_string(t));
  }
  const double sh = std::sinh(t);
  const double sgn = t > 0.0 ? 1.0 : -1.0;
  return {std::cosh(t) / (2.0 * sh), 1.0 / sh,
          std::polar(1.0 / std::sqrt(2.0 * std::numbers::pi * std::abs(sh)), -sgn * std::numbers::pi / 4.0)};
}

// s_j chirp times trapezoid weight times w_j
std::vector<Complex> weighted_input(const RadialField& field, double alpha) {
  const auto& grid = field.grid();
  std::vector<Complex> v(grid.size());
  for (std::size_t j = 0; j < grid.size(); ++j) {
    const double s = grid.radius(j);
    v[j] = trapezoid_weight(grid, j) * std::polar(1.0, alpha * s * s) * field[j];
  }
  return v;
}

// a j_1(a) = sin a / a - cos a
double spherical_bessel1_scaled(double a) {
  if (std::abs(a) < 1e-3) {
    const double a2 = a * a;
    return a2 / 3.0 - a2 * a2 / 30.0;
  }
  return std::sin(a) / a - std::cos(a);
}

template <typename Radial>
RadialField apply(const RadialField& field, double t, double t_min, Radial radial_kernel) {
  const Kernel k = kernel(field.grid(), t, t_min);
  const auto& grid = field.grid();
  const auto v = weighted_input(field, k.alpha);
  std::vector<Complex> out(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double r = grid.radius(i);
    Complex sum{};
    for (std::size_t j = 0; j < grid.size(); ++j) sum += radial_kernel(k.beta * r * grid.radius(j)) * v[j];
    out[i] = std::polar(1.0, k.alpha * r * r) * sum;
  }
  return RadialField(field.grid_ptr(), std::move(out), field.time() + t);
}

}  // namespace

double mehler_resolution_floor(const RadialGrid& grid, double t_min) {
  return std::max(t_min, std::asinh(grid.r_max() / grid.k_max()));
}

RadialField mehler_apply(const RadialField& field, double t, double t_min) {
  const Complex c = -2i * kernel(field.grid(), t, t_min).pref;
  auto out = apply(field, t, t_min, [](double a) { return std::sin(a); });
  out *= c;
  return out;
}

Complex mehler_origin_value(const RadialField& field, double t, double t_min) {
  const Kernel k = kernel(field.grid(), t, t_min);
  const auto v = weighted_input(field, k.alpha);
  Complex sum{};
  for (std::size_t j = 0; j < v.size(); ++j) sum += field.grid().radius(j) * v[j];
  // lim_{r -> 0} sin(beta r s) / r = beta s
  return -2i * k.pref * k.beta * sum;
}

RadialField mehler_apply_vector(const RadialField& field, double t, double t_min) {
  const Complex c = -2.0 * kernel(field.grid(), t, t_min).pref;
  auto out = apply(field, t, t_min, spherical_bessel1_scaled);
  out *= c;
  return out;
}

}  // namespace rnls
