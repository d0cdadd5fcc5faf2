#pragma once

#include <vector>

#include "rnls/field.hpp"

namespace rnls {

/// Dyadic Littlewood-Paley multipliers on the sine-coefficient variable.
///
/// phi_j(k) = psi(k / 2^j) - psi(k / 2^(j-1)) with psi = cutoff, so phi_j is
/// supported in [2^(j-1), 2^(j+1)] and the levels telescope. Resolvable levels
/// run from 4 pi / r_max up to k_max / 4.
class MultiplierBank {
 public:
  explicit MultiplierBank(GridPtr grid);

  const RadialGrid& grid() const noexcept { return *grid_; }
  int min_level() const noexcept { return j_min_; }
  int max_level() const noexcept { return j_max_; }
  /// Frequencies N = 2^j of the resolvable levels, ascending.
  std::vector<double> frequencies() const;
  bool contains(double frequency) const noexcept;

  /// Table of phi_N at the grid wavenumbers. Throws ErrorKind::range for unknown N.
  const std::vector<double>& multiplier(double frequency) const;
  /// psi(k / N): the symbol of P_{<=N}.
  std::vector<double> low_multiplier(double frequency) const;
  /// Symbols of what the resolvable levels leave out below and above.
  const std::vector<double>& low_remainder() const noexcept { return low_; }
  const std::vector<double>& high_remainder() const noexcept { return high_; }

 private:
  std::size_t index(double frequency) const;

  GridPtr grid_;
  int j_min_;
  int j_max_;
  std::vector<std::vector<double>> tables_;
  std::vector<double> low_;
  std::vector<double> high_;
};

/// P_N f. Throws ErrorKind::range when N is not a resolvable level.
RadialField lp_project(const MultiplierBank& bank, const RadialField& field, double frequency);
/// P_{<=N} f. Throws ErrorKind::range when N is not a resolvable level.
RadialField lp_project_low(const MultiplierBank& bank, const RadialField& field, double frequency);
RadialField lp_low_remainder(const MultiplierBank& bank, const RadialField& field);
RadialField lp_high_remainder(const MultiplierBank& bank, const RadialField& field);

/// ||P_N f||_p / (N^{3(1/q - 1/p)} ||P_N f||_q) for 1 <= q <= p <= inf.
/// Throws ErrorKind::undefined when P_N f vanishes.
double bernstein_ratio(const MultiplierBank& bank, const RadialField& field, double frequency, double p, double q);

}  // namespace rnls
