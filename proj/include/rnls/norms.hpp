#pragma once

#include <limits>
#include <span>

#include "rnls/field.hpp"

namespace rnls {

inline constexpr double infinity_exponent = std::numeric_limits<double>::infinity();

/// Trapezoid weight of sample i on [0, r_max]; the origin node carries a zero integrand.
inline double trapezoid_weight(const RadialGrid& grid, std::size_t i) noexcept {
  return i + 1 == grid.size() ? 0.5 * grid.dr() : grid.dr();
}

/// Trapezoid integral over [0, radius] of samples f(r_i), assuming f(0) = 0.
/// The cell containing radius is closed by linear interpolation.
double integrate_to_radius(const RadialGrid& grid, std::span<const double> f, double radius);

/// ||u||_2^2 = 4 pi int |w|^2 dr.
double mass_squared(const RadialField& field);

/// ||x u||_2^2 = 4 pi int r^2 |w|^2 dr.
double second_moment_squared(const RadialField& field);

/// ||u||_p over R^3 for 1 <= p <= inf. The sup norm includes u(0) = w'(0),
/// estimated spectrally. Throws ErrorKind::range for p < 1.
double lp_norm(const RadialField& field, double p);

/// ||u||_p^p for finite p >= 1.
double lp_integral(const RadialField& field, double p);

/// ||u||_H1 + ||x u||_2 with ||grad u||_2^2 evaluated spectrally.
double sigma_norm(const RadialField& field);

/// Mass in r > fraction * r_max relative to the total; 0 for the zero field.
double tail_mass_fraction(const RadialField& field, double fraction = 0.9);

/// ||u||_{L^p(|x| < radius)}, radius <= r_max.
double ball_lp_norm(const RadialField& field, double p, double radius);
/// ||u||_{L^p(inner <= |x| <= outer)}.
double annulus_lp_norm(const RadialField& field, double p, double inner, double outer);
/// ||grad u||_{L^2(|x| < radius)}.
double ball_gradient_norm(const RadialField& field, double radius);

}  // namespace rnls
