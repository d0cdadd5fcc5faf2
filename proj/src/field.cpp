#include "rnls/field.hpp"

#include <algorithm>
#include <cmath>

#include "rnls/error.hpp"

namespace rnls {

RadialField::RadialField(GridPtr grid, std::vector<Complex> w, double time)
    : grid_(std::move(grid)), w_(std::move(w)), time_(time) {
  if (!grid_) fail(ErrorKind::range, "field requires a grid");
  if (w_.size() != grid_->size()) fail(ErrorKind::range, "field length does not match grid size");
  for (const auto& v : w_) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) fail(ErrorKind::range, "field holds a non-finite sample");
  }
}

RadialField::RadialField(GridPtr grid, double time) : grid_(std::move(grid)), time_(time) {
  if (!grid_) fail(ErrorKind::range, "field requires a grid");
  w_.assign(grid_->size(), Complex{});
}

bool RadialField::is_zero() const noexcept {
  return std::all_of(w_.begin(), w_.end(), [](const Complex& v) { return v == Complex{}; });
}

void require_same_grid(const RadialField& a, const RadialField& b) {
  if (!(a.grid() == b.grid())) fail(ErrorKind::range, "fields live on different grids");
}

RadialField& RadialField::operator+=(const RadialField& rhs) {
  require_same_grid(*this, rhs);
  for (std::size_t i = 0; i < w_.size(); ++i) w_[i] += rhs.w_[i];
  return *this;
}

RadialField& RadialField::operator-=(const RadialField& rhs) {
  require_same_grid(*this, rhs);
  for (std::size_t i = 0; i < w_.size(); ++i) w_[i] -= rhs.w_[i];
  return *this;
}

RadialField& RadialField::operator*=(Complex c) noexcept {
  for (auto& v : w_) v *= c;
  return *this;
}

RadialField operator+(RadialField lhs, const RadialField& rhs) { return lhs += rhs; }
RadialField operator-(RadialField lhs, const RadialField& rhs) { return lhs -= rhs; }
RadialField operator*(Complex c, RadialField f) { return f *= c; }

}  // namespace rnls
