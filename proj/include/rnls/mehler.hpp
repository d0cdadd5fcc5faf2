#pragma once

#include "rnls/field.hpp"

namespace rnls {

/// Shortest |t| for which the chirped kernel is trusted on a grid.
inline constexpr double mehler_t_min = 0.05;

/// Smallest |t| accepted on a grid: t_min, raised so that the kernel
/// frequency r_max / sinh t stays below k_max.
double mehler_resolution_floor(const RadialGrid& grid, double t_min = mehler_t_min);

/// U(t) by direct O(n^2) trapezoid quadrature of the inverted-oscillator
/// Mehler kernel on the odd extension:
///   w_out(r) = int_0^L [K_t(r, s) - K_t(r, -s)] w(s) ds,
///   K_t(x, y) = e^{-i pi/4 sgn t} |2 pi sinh t|^{-1/2} exp(i[(x^2 + y^2) cosh t - 2xy] / (2 sinh t)).
/// Throws ErrorKind::kernel_resolution below mehler_resolution_floor.
RadialField mehler_apply(const RadialField& field, double t, double t_min = mehler_t_min);

/// u_out(0) of mehler_apply, evaluated by quadrature rather than from the samples.
Complex mehler_origin_value(const RadialField& field, double t, double t_min = mehler_t_min);

/// U(t) on the l = 1 channel. The input holds r times the radial component
/// of a radial vector field f(r) x/|x|, which is how Galilean outputs are stored.
RadialField mehler_apply_vector(const RadialField& field, double t, double t_min = mehler_t_min);

}  // namespace rnls
