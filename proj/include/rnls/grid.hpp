#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

namespace rnls {

/// Uniform half-line grid r_i = i*dr, i = 1..n, with r_n = r_max the Dirichlet end.
/// The origin is not stored. Wavenumbers k_m = pi*m/r_max, m = 1..n, are the
/// sine modes of the odd extension of period 2*r_max; mode n vanishes on the grid.
class RadialGrid {
 public:
  RadialGrid(double r_max, std::size_t n);

  double r_max() const noexcept { return r_max_; }
  std::size_t size() const noexcept { return n_; }
  double dr() const noexcept { return dr_; }
  double radius(std::size_t i) const noexcept { return radii_[i]; }
  double wavenumber(std::size_t m) const noexcept { return wavenumbers_[m]; }
  double k_max() const noexcept { return wavenumbers_.back(); }

  /// radii()[i] holds r_{i+1}.
  std::span<const double> radii() const noexcept { return radii_; }
  /// wavenumbers()[m] holds k_{m+1}.
  std::span<const double> wavenumbers() const noexcept { return wavenumbers_; }

  bool operator==(const RadialGrid& other) const noexcept {
    return n_ == other.n_ && r_max_ == other.r_max_;
  }

 private:
  double r_max_;
  std::size_t n_;
  double dr_;
  std::vector<double> radii_;
  std::vector<double> wavenumbers_;
};

using GridPtr = std::shared_ptr<const RadialGrid>;

/// Throws ErrorKind::config unless n is a power of two >= 8 and r_max > 0.
GridPtr make_grid(double r_max, std::size_t n);

}  // namespace rnls
