#pragma once

namespace rnls {

/// C-infinity step: 0 for x <= 0, 1 for x >= 1, built from exp(-1/x).
double smooth_step(double x) noexcept;
double smooth_step_derivative(double x) noexcept;

/// Cutoff equal to 1 on [0, 1] and 0 on [2, inf). Drives both the
/// Littlewood-Paley multipliers and the bubble-removal cut.
double cutoff(double s) noexcept;
double cutoff_derivative(double s) noexcept;

/// Local-mass weight: 1 on [0, 1/2], 0 on [1, inf); equals cutoff(2s).
inline double local_mass_weight(double s) noexcept { return cutoff(2.0 * s); }

}  // namespace rnls
