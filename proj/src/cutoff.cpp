#include "rnls/cutoff.hpp"

#include <cmath>

namespace rnls {

namespace {
double bump(double x) noexcept { return x > 0.0 ? std::exp(-1.0 / x) : 0.0; }
double bump_derivative(double x) noexcept { return x > 0.0 ? std::exp(-1.0 / x) / (x * x) : 0.0; }
}  // namespace

double smooth_step(double x) noexcept {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  const double a = bump(x);
  const double b = bump(1.0 - x);
  return a / (a + b);
}

double smooth_step_derivative(double x) noexcept {
  if (x <= 0.0 || x >= 1.0) return 0.0;
  const double a = bump(x);
  const double b = bump(1.0 - x);
  const double da = bump_derivative(x);
  const double db = -bump_derivative(1.0 - x);
  const double s = a + b;
  return (da * s - a * (da + db)) / (s * s);
}

double cutoff(double s) noexcept { return smooth_step(2.0 - s); }

double cutoff_derivative(double s) noexcept { return -smooth_step_derivative(2.0 - s); }

}  // namespace rnls
