#pragma once

#include <complex>
#include <span>
#include <vector>

#include "rnls/grid.hpp"

namespace rnls {

using Complex = std::complex<double>;

/// Samples of w(r) = r*u(r) at the grid radii, tagged with the solution time.
///
/// Fields produced by the evolver keep w(r_max) = 0. Galilean outputs store
/// the reduced radial component of a vector field and may carry a nonzero
/// last sample; every quadrature gives that sample half weight.
class RadialField {
 public:
  RadialField(GridPtr grid, std::vector<Complex> w, double time = 0.0);
  /// All-zero field.
  explicit RadialField(GridPtr grid, double time = 0.0);

  const RadialGrid& grid() const noexcept { return *grid_; }
  const GridPtr& grid_ptr() const noexcept { return grid_; }
  std::size_t size() const noexcept { return w_.size(); }
  double time() const noexcept { return time_; }
  void set_time(double t) noexcept { time_ = t; }

  std::span<const Complex> values() const noexcept { return w_; }
  std::span<Complex> values() noexcept { return w_; }
  const Complex& operator[](std::size_t i) const noexcept { return w_[i]; }
  Complex& operator[](std::size_t i) noexcept { return w_[i]; }

  bool is_zero() const noexcept;

  RadialField& operator+=(const RadialField& rhs);
  RadialField& operator-=(const RadialField& rhs);
  RadialField& operator*=(Complex c) noexcept;

 private:
  GridPtr grid_;
  std::vector<Complex> w_;
  double time_;
};

RadialField operator+(RadialField lhs, const RadialField& rhs);
RadialField operator-(RadialField lhs, const RadialField& rhs);
RadialField operator*(Complex c, RadialField f);

/// Throws ErrorKind::range when the fields live on different grids.
void require_same_grid(const RadialField& a, const RadialField& b);

}  // namespace rnls
