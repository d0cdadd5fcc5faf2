#pragma once

#include <span>
#include <vector>

#include "rnls/field.hpp"

namespace rnls {

/// Sine coefficients Y_m = 2 sum_i w_i sin(pi m i / n) of the odd extension
/// (FFTW RODFT00 convention), m = 1..n; the entry for m = n is always zero.
/// The continuum series is w(r) = sum_m (Y_m / n) sin(k_m r).
std::vector<Complex> dst_forward(const RadialField& field);

/// Unnormalized RODFT00 over the first n - 1 entries of a length-n buffer;
/// out[n - 1] is set to zero. Applying it twice multiplies by 2n.
void sine_transform_raw(std::span<const Complex> in, std::span<Complex> out);

/// Inverse of dst_forward. Throws ErrorKind::range on a length mismatch.
RadialField dst_backward(std::span<const Complex> coeffs, GridPtr grid, double time);

/// w_r at r = 0, dr, ..., r_max (n + 1 values) from the sine series.
std::vector<Complex> radial_derivative(const RadialField& field);

/// u(0) = lim w(r)/r = w'(0).
Complex origin_value(const RadialField& field);

/// ||grad u||_2^2 = 4 pi int |w_r|^2 dr, summed exactly over sine modes.
double gradient_norm_sq(const RadialField& field);

/// Multiplies the sine coefficients by m(k_j) and transforms back.
RadialField apply_multiplier(const RadialField& field, std::span<const double> multiplier);

}  // namespace rnls
