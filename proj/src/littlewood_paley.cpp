#include "rnls/littlewood_paley.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "rnls/cutoff.hpp"
#include "rnls/error.hpp"
#include "rnls/norms.hpp"
#include "rnls/sine_transform.hpp"

namespace rnls {

namespace {

std::vector<double> psi_table(const RadialGrid& grid, double frequency) {
  std::vector<double> t(grid.size());
  for (std::size_t m = 0; m < grid.size(); ++m) t[m] = cutoff(grid.wavenumber(m) / frequency);
  return t;
}

}  // namespace

MultiplierBank::MultiplierBank(GridPtr grid) : grid_(std::move(grid)) {
  j_min_ = static_cast<int>(std::ceil(std::log2(4.0 * std::numbers::pi / grid_->r_max()) - 1e-12));
  j_max_ = static_cast<int>(std::floor(std::log2(grid_->k_max() / 4.0) + 1e-12));
  if (j_max_ < j_min_) fail(ErrorKind::resolution, "grid resolves no dyadic level");
  for (int j = j_min_; j <= j_max_; ++j) {
    auto upper = psi_table(*grid_, std::ldexp(1.0, j));
    const auto lower = psi_table(*grid_, std::ldexp(1.0, j - 1));
    for (std::size_t m = 0; m < upper.size(); ++m) upper[m] -= lower[m];
    tables_.push_back(std::move(upper));
  }
  low_ = psi_table(*grid_, std::ldexp(1.0, j_min_ - 1));
  high_ = psi_table(*grid_, std::ldexp(1.0, j_max_));
  for (auto& v : high_) v = 1.0 - v;
}

std::vector<double> MultiplierBank::frequencies() const {
  std::vector<double> out;
  for (int j = j_min_; j <= j_max_; ++j) out.push_back(std::ldexp(1.0, j));
  return out;
}

bool MultiplierBank::contains(double frequency) const noexcept {
  if (!(frequency > 0.0)) return false;
  int e = 0;
  const double mant = std::frexp(frequency, &e);
  const int j = e - 1;
  return mant == 0.5 && j >= j_min_ && j <= j_max_;
}

std::size_t MultiplierBank::index(double frequency) const {
  if (!contains(frequency)) {
    fail(ErrorKind::range, "frequency " + std::to_string(frequency) + " is not a resolvable dyadic level");
  }
  return static_cast<std::size_t>(std::lround(std::log2(frequency)) - j_min_);
}

const std::vector<double>& MultiplierBank::multiplier(double frequency) const { return tables_[index(frequency)]; }

std::vector<double> MultiplierBank::low_multiplier(double frequency) const {
  index(frequency);
  return psi_table(*grid_, frequency);
}

RadialField lp_project(const MultiplierBank& bank, const RadialField& field, double frequency) {
  return apply_multiplier(field, bank.multiplier(frequency));
}

RadialField lp_project_low(const MultiplierBank& bank, const RadialField& field, double frequency) {
  return apply_multiplier(field, bank.low_multiplier(frequency));
}

RadialField lp_low_remainder(const MultiplierBank& bank, const RadialField& field) {
  return apply_multiplier(field, bank.low_remainder());
}

RadialField lp_high_remainder(const MultiplierBank& bank, const RadialField& field) {
  return apply_multiplier(field, bank.high_remainder());
}

double bernstein_ratio(const MultiplierBank& bank, const RadialField& field, double frequency, double p, double q) {
  if (!(q >= 1.0) || !(p >= q)) fail(ErrorKind::range, "Bernstein exponents need 1 <= q <= p");
  const auto projected = lp_project(bank, field, frequency);
  const double denom = lp_norm(projected, q);
  if (!(denom > 0.0)) fail(ErrorKind::undefined, "Littlewood-Paley piece vanishes");
  const double inv_p = std::isinf(p) ? 0.0 : 1.0 / p;
  return lp_norm(projected, p) / (std::pow(frequency, 3.0 * (1.0 / q - inv_p)) * denom);
}

}  // namespace rnls
