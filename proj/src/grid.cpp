#include "rnls/grid.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <string>

#include "rnls/error.hpp"

namespace rnls {

RadialGrid::RadialGrid(double r_max, std::size_t n)
    : r_max_(r_max), n_(n), dr_(r_max / static_cast<double>(n)), radii_(n), wavenumbers_(n) {
  if (!(r_max > 0.0) || !std::isfinite(r_max)) fail(ErrorKind::config, "r_max must be positive and finite");
  if (n < 8 || !std::has_single_bit(n)) {
    fail(ErrorKind::config, "grid size must be a power of two >= 8, got " + std::to_string(n));
  }
  for (std::size_t i = 0; i < n; ++i) {
    radii_[i] = static_cast<double>(i + 1) * dr_;
    wavenumbers_[i] = std::numbers::pi * static_cast<double>(i + 1) / r_max;
  }
}

GridPtr make_grid(double r_max, std::size_t n) { return std::make_shared<const RadialGrid>(r_max, n); }

}  // namespace rnls
