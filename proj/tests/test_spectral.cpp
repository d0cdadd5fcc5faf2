#include <doctest.h>

#include <cmath>

#include "rnls/cutoff.hpp"
#include "rnls/error.hpp"
#include "rnls/littlewood_paley.hpp"
#include "rnls/norms.hpp"
#include "rnls/sine_transform.hpp"
#include "support.hpp"

using namespace rnls;
using namespace rnls::test;

namespace {

RadialField sine_modes(const GridPtr& g, std::initializer_list<std::pair<std::size_t, Complex>> modes) {
  std::vector<Complex> w(g->size());
  for (std::size_t i = 0; i < g->size(); ++i) {
    for (auto [m, a] : modes) w[i] += a * std::sin(static_cast<double>(m) * pi * g->radius(i) / g->r_max());
  }
  w.back() = 0.0;
  return RadialField(g, std::move(w));
}

double l2_distance(const RadialField& a, const RadialField& b) { return std::sqrt(mass_squared(a - b)); }

}  // namespace

TEST_CASE("sine transform of modes") {
  auto g = default_grid();
  auto one = dst_forward(sine_modes(g, {{1, 1.0}}));
  CHECK(std::abs(one[0] - Complex(static_cast<double>(g->size()))) < 1e-9);
  for (std::size_t m = 1; m < one.size(); ++m) CHECK(std::abs(one[m]) < 1e-9);

  auto two = dst_forward(sine_modes(g, {{1, 1.0}, {3, Complex(0.0, 2.0)}}));
  std::size_t nonzero = 0;
  for (const auto& c : two) nonzero += std::abs(c) > 1e-9 ? 1 : 0;
  CHECK(nonzero == 2);
  CHECK(std::abs(two[2] / static_cast<double>(g->size()) - Complex(0.0, 2.0)) < 1e-12);
}

TEST_CASE("sine transform round trip") {
  auto g = default_grid();
  auto u = gaussian(g);
  u *= Complex(0.3, -0.9);
  auto back = dst_backward(dst_forward(u), g, u.time());
  double err = 0.0;
  for (std::size_t i = 0; i < g->size(); ++i) err = std::max(err, std::abs(back[i] - u[i]));
  CHECK(err < 1e-12);
  CHECK_THROWS_AS(dst_backward(std::vector<Complex>(7), g, 0.0), Error);
}

TEST_CASE("spectral derivative") {
  auto g = default_grid();
  auto u = gaussian(g);
  const auto dw = radial_derivative(u);
  REQUIRE(dw.size() == g->size() + 1);
  double err = 0.0;
  for (std::size_t i = 0; i <= g->size(); ++i) {
    const double r = static_cast<double>(i) * g->dr();
    err = std::max(err, std::abs(dw[i] - (1.0 - r * r) * std::exp(-r * r / 2)));
  }
  CHECK(err < 1e-10);
}

TEST_CASE("gradient_norm_sq of a single mode") {
  auto g = default_grid();
  const std::size_t m = 7;
  auto u = sine_modes(g, {{m, 0.5}});
  // w = a sin(k r): 4 pi int_0^L a^2 k^2 cos^2 = 4 pi a^2 k^2 L / 2
  const double k = g->wavenumber(m - 1);
  CHECK(rel_err(gradient_norm_sq(u), 4 * pi * 0.25 * k * k * g->r_max() / 2) < 1e-12);
  CHECK(rel_err(gradient_norm_sq(u), k * k * mass_squared(u)) < 1e-12);
}

TEST_CASE("multiplier bank levels") {
  auto g = default_grid();
  MultiplierBank bank(g);
  // 4 pi / 16 = 0.785 -> N = 1 ; k_max / 4 = 50.3 -> N = 32
  CHECK(bank.frequencies() == std::vector<double>{1, 2, 4, 8, 16, 32});
  CHECK(bank.contains(8.0));
  CHECK_FALSE(bank.contains(64.0));
  CHECK_FALSE(bank.contains(0.5));
  CHECK_FALSE(bank.contains(6.0));
  try {
    lp_project(bank, gaussian(g), 64.0);
    FAIL("expected range error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::range);
  }
}

TEST_CASE("partition of unity and supports") {
  auto g = default_grid();
  MultiplierBank bank(g);
  const auto freqs = bank.frequencies();
  for (std::size_t m = 0; m < g->size(); ++m) {
    const double k = g->wavenumber(m);
    double sum = 0.0;
    for (double N : freqs) {
      const double phi = bank.multiplier(N)[m];
      sum += phi;
      if (k <= N / 2 || k >= 2 * N) CHECK(phi == 0.0);
      CHECK(phi >= 0.0);
    }
    if (k >= freqs.front() && k <= freqs.back()) CHECK(std::abs(sum - 1.0) < 1e-12);
    CHECK(std::abs(sum + bank.low_remainder()[m] + bank.high_remainder()[m] - 1.0) < 1e-12);
  }
}

TEST_CASE("projection reconstruction, orthogonality and zero") {
  auto g = default_grid();
  MultiplierBank bank(g);
  auto u = sample_profile(ProfileSpec::concentrate(8.0), g);
  auto sum = lp_low_remainder(bank, u) + lp_high_remainder(bank, u);
  for (double N : bank.frequencies()) sum += lp_project(bank, u, N);
  CHECK(l2_distance(sum, u) < 1e-10 * std::sqrt(mass_squared(u)));

  auto a = lp_project(bank, u, 2.0);
  auto b = lp_project(bank, u, 8.0);
  Complex inner{};
  for (std::size_t i = 0; i < g->size(); ++i) inner += std::conj(a[i]) * b[i];
  CHECK(std::abs(inner) * g->dr() * 4 * pi < 1e-10 * mass_squared(u));

  CHECK(lp_project(bank, RadialField(g), 4.0).is_zero());
}

TEST_CASE("lp_project_low telescopes") {
  auto g = default_grid();
  MultiplierBank bank(g);
  auto u = gaussian(g);
  auto low = lp_low_remainder(bank, u);
  for (double N : bank.frequencies()) {
    low += lp_project(bank, u, N);
    CHECK(l2_distance(low, lp_project_low(bank, u, N)) < 1e-12);
  }
}

TEST_CASE("multiplier equals one at k = N") {
  // r_max = 4 pi puts k_m = m / 4 on the grid, so k = 4 is mode 16.
  auto g = make_grid(4.0 * pi, 1024);
  MultiplierBank bank(g);
  auto u = sine_modes(g, {{16, Complex(1.0, -1.0)}});
  CHECK(l2_distance(lp_project(bank, u, 4.0), u) < 1e-10);
  // interior of [N, 2N]: the symbol is psi(k / N), applied diagonally
  auto v = sine_modes(g, {{24, 1.0}});
  auto pv = lp_project(bank, v, 4.0);
  CHECK(l2_distance(pv, cutoff(6.0 / 4.0) * v) < 1e-10);
}

TEST_CASE("idempotence audit") {
  auto g = default_grid();
  MultiplierBank bank(g);
  auto u = sample_profile(ProfileSpec::bump(1.0, 0.3, 2.0), g);
  for (double N : {2.0, 8.0}) {
    auto p = lp_project(bank, u, N);
    auto pp = lp_project(bank, p, N);
    std::vector<double> defect(bank.multiplier(N));
    for (auto& x : defect) x = x * x - x;
    const double lhs = l2_distance(pp, p);
    const double rhs = std::sqrt(mass_squared(apply_multiplier(u, defect)));
    CHECK(std::abs(lhs - rhs) <= 1e-10 * std::sqrt(mass_squared(u)));
  }
  auto low = lp_project_low(bank, u, 4.0);
  auto low2 = lp_project_low(bank, low, 4.0);
  CHECK(l2_distance(low2, low) < 0.1 * std::sqrt(mass_squared(low)));
}

TEST_CASE("bernstein ratios") {
  auto g = default_grid();
  MultiplierBank bank(g);
  auto u = gaussian(g);
  CHECK(bernstein_ratio(bank, u, 4.0, 6.0, 6.0) == 1.0);
  CHECK(bernstein_ratio(bank, u, 2.0, infinity_exponent, infinity_exponent) == 1.0);
  const double r = bernstein_ratio(bank, u, 4.0, infinity_exponent, 6.0);
  CHECK(r > 0.0);
  CHECK(r <= 10.0);

  auto c8 = sample_profile(ProfileSpec::concentrate(8.0), g);
  auto c16 = sample_profile(ProfileSpec::concentrate(16.0), g);
  const double r8 = bernstein_ratio(bank, c8, 8.0, infinity_exponent, 2.0);
  const double r16 = bernstein_ratio(bank, c16, 16.0, infinity_exponent, 2.0);
  CHECK(r16 / r8 < 3.0);
  CHECK(r8 / r16 < 3.0);

  try {
    bernstein_ratio(bank, RadialField(g), 4.0, 6.0, 2.0);
    FAIL("expected undefined-ratio error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::undefined);
  }
  // corpus constant
  double worst = 0.0;
  for (const auto& spec : {ProfileSpec::gaussian(1.0, 1.0), ProfileSpec::bump(1.0, 0.5, 3.0), ProfileSpec::concentrate(2.0),
                           ProfileSpec::concentrate(4.0), ProfileSpec::concentrate(8.0), ProfileSpec::concentrate(16.0)}) {
    auto f = sample_profile(spec, g);
    for (double N : bank.frequencies()) {
      if (std::sqrt(mass_squared(lp_project(bank, f, N))) < 1e-8 * std::sqrt(mass_squared(f))) continue;
      worst = std::max(worst, bernstein_ratio(bank, f, N, infinity_exponent, 2.0));
    }
  }
  CHECK(worst < 10.0);
}
