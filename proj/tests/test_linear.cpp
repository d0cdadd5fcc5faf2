#include <doctest.h>

#include <array>
#include <cmath>

#include "rnls/error.hpp"
#include "rnls/galilean.hpp"
#include "rnls/linear_flow.hpp"
#include "rnls/mehler.hpp"
#include "rnls/norms.hpp"
#include "rnls/sine_transform.hpp"
#include "support.hpp"

using namespace rnls;
using namespace rnls::test;
using namespace std::complex_literals;

namespace {

double l2(const RadialField& f) { return std::sqrt(mass_squared(f)); }

}  // namespace

TEST_CASE("Gaussian ODE oracle agrees with B = tan(pi/4 - it)") {
  for (double t : {0.5, 1.0}) {
    const auto [a, b] = gaussian_ode(t);
    CHECK(std::abs(b - std::tan(Complex(pi / 4, -t))) < 1e-12);
    CHECK(std::abs(a) < 1.0);
  }
}

TEST_CASE("mehler_apply matches the Gaussian oracle") {
  auto g = default_grid();
  auto u = gaussian(g);
  CHECK(mehler_resolution_floor(*g) == doctest::Approx(std::asinh(16.0 / g->k_max())));
  CHECK(mehler_resolution_floor(*make_grid(16.0, 2048)) == mehler_t_min);
  auto fine = make_grid(16.0, 2048);
  CHECK(l2(mehler_apply(gaussian(fine), 0.05) - gaussian_exact(fine, 0.05)) < 1e-6);
  for (double t : {0.08, 0.5, 1.0}) {
    auto m = mehler_apply(u, t);
    CHECK(m.time() == t);
    CHECK(l2(m - gaussian_exact(g, t)) < 1e-6);
    CHECK(std::abs(mehler_origin_value(u, t) - gaussian_ode(t).first) < 1e-8);
  }
  auto back = mehler_apply(u, -0.7);
  CHECK(l2(mehler_apply(back, 0.7) - u) < 1e-6);
}

TEST_CASE("mehler_apply is unitary and rejects short times") {
  auto g = default_grid();
  for (const auto& spec : {ProfileSpec::gaussian(1.0, 1.0), ProfileSpec::bump(1.0, 0.5, 2.0), ProfileSpec::concentrate(2.0)}) {
    auto u = sample_profile(spec, g);
    for (double t : {0.3, 1.0, -0.8}) CHECK(rel_err(l2(mehler_apply(u, t)), l2(u)) < 1e-6);
  }
  CHECK(mehler_apply(RadialField(g), 1.0).is_zero());
  try {
    mehler_apply(gaussian(g), 0.06);
    FAIL("expected kernel-resolution error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kernel_resolution);
  }
}

TEST_CASE("propagator phase tables are unimodular") {
  PropagatorPlan plan(default_grid(), 1e-3, Splitting::strang);
  for (auto p : plan.potential_phase()) CHECK(std::abs(std::abs(p) - 1.0) < 1e-14);
  for (auto p : plan.kinetic_phase()) CHECK(std::abs(std::abs(p) - 1.0) < 1e-14);
}

TEST_CASE("linear_flow against the Mehler oracle") {
  auto g = default_grid();
  auto u = gaussian(g);
  auto exact = mehler_apply(u, 1.0);
  std::array<double, 3> err{};
  const std::array<double, 3> dts{2e-3, 1e-3, 5e-4};
  for (std::size_t i = 0; i < 3; ++i) err[i] = l2(linear_flow(u, 1.0, dts[i]) - exact);
  CHECK(err[1] < 1e-6);
  const double order1 = std::log2(err[0] / err[1]);
  const double order2 = std::log2(err[1] / err[2]);
  CHECK(order1 >= 1.8);
  CHECK(order1 <= 2.2);
  CHECK(order2 >= 1.8);
  CHECK(order2 <= 2.2);
  // exact factorization of the quadratic flow: independent of dt
  CHECK(l2(linear_flow(u, 1.0, 0.1, Splitting::exact_linear) - exact) < 1e-8);
}

TEST_CASE("linear_flow group law, reversal, unitarity") {
  auto g = default_grid();
  auto u = sample_profile(ProfileSpec::bump(1.0, 0.5, 2.0), g);
  auto a = linear_flow(linear_flow(u, 0.4, 1e-3), 0.6, 1e-3);
  auto b = linear_flow(u, 1.0, 1e-3);
  CHECK(l2(a - b) < 1e-8);
  CHECK(b.time() == doctest::Approx(1.0));
  CHECK(l2(linear_flow(b, -1.0, 1e-3) - u) < 1e-8);
  CHECK(std::abs(l2(b) - l2(u)) < 1e-13 * l2(u));
  auto same = linear_flow(u, 0.0, 1e-3);
  CHECK(l2(same - u) == 0.0);
  // remainder step
  auto p = linear_flow(u, 0.0105, 1e-3);
  auto q = linear_flow(linear_flow(u, 0.01, 1e-3), 0.0005, 1e-3);
  CHECK(l2(p - q) < 1e-13);
}

TEST_CASE("linear_flow tail guard") {
  auto g = default_grid();
  try {
    linear_flow(gaussian(g), 2.0, 1e-2);
    FAIL("expected truncation");
  } catch (const TruncationError& e) {
    CHECK(e.kind() == ErrorKind::truncation);
    CHECK(e.time() > 1.0);
    CHECK(e.time() <= 2.0);
  }
  CHECK_NOTHROW(linear_flow(gaussian(g), 2.0, 1e-2, Splitting::strang, 1e-2));
}

TEST_CASE("dispersive ratio") {
  auto g = default_grid();
  auto u = gaussian(g);
  double prev = 0.0;
  for (double t : {0.5, 1.0, 2.0, 4.0}) {
    const auto d = dispersive_ratio(u, t);
    CHECK(d.sinh_form <= 1.0 + 1e-3);
    CHECK(d.plain > 0.0);
    // exact peak is |A(t)| at the origin and ||u0||_1 = (2 pi)^{3/2}
    const double expected = std::abs(gaussian_ode(t, 40000).first) * std::pow(std::sinh(t), 1.5);
    CHECK(d.sinh_form == doctest::Approx(expected).epsilon(1e-5));
    if (t >= 4.0) CHECK(d.sinh_form <= 1.05 * prev);
    prev = d.sinh_form;
  }
  CHECK_THROWS_AS(dispersive_ratio(RadialField(g), 1.0), Error);
}

TEST_CASE("Galilean operators at t = 0") {
  auto g = default_grid();
  auto u = gaussian(g);
  CHECK(rel_err(mass_squared(galilean_apply(u, 0.0, Galilean::J)), gradient_norm_sq(u)) < 1e-10);
  CHECK(rel_err(mass_squared(galilean_apply(u, 0.0, Galilean::H)), second_moment_squared(u)) < 1e-10);
  CHECK(rel_err(mass_squared(galilean_apply(u, 0.0, Galilean::J, GalileanMethod::factorized)), gradient_norm_sq(u)) <
        1e-10);
  try {
    galilean_apply(u, 0.0, Galilean::H, GalileanMethod::factorized);
    FAIL("expected range error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::range);
  }
}

TEST_CASE("Galilean direct and factorized forms agree") {
  auto g = default_grid();
  for (const auto& spec : {ProfileSpec::gaussian(1.0, 1.0), ProfileSpec::bump(0.8, 0.6, 2.5)}) {
    auto u = sample_profile(spec, g);
    u *= std::polar(1.0, 0.3);
    for (double t : {0.3, 0.7, 1.5}) {
      for (auto which : {Galilean::J, Galilean::H}) {
        auto d = galilean_apply(u, t, which, GalileanMethod::direct);
        auto f = galilean_apply(u, t, which, GalileanMethod::factorized);
        CHECK(l2(d - f) < 1e-8);
      }
      auto recon = std::cosh(t) * galilean_apply(u, t, Galilean::H) - std::sinh(t) * galilean_apply(u, t, Galilean::J);
      std::vector<Complex> xu(g->size());
      for (std::size_t i = 0; i < g->size(); ++i) xu[i] = g->radius(i) * u[i];
      CHECK(l2(recon - RadialField(g, xu)) < 1e-8);
    }
  }
}

TEST_CASE("l = 1 Mehler kernel on a Gaussian-times-x oracle") {
  // x_j exp(-r^2/2) evolves as A1 x_j exp(-B r^2/2), A1' = -(5i/2) B A1
  auto g = default_grid();
  std::vector<Complex> chi(g->size());
  for (std::size_t i = 0; i + 1 < g->size(); ++i) {
    const double r = g->radius(i);
    chi[i] = r * r * std::exp(-r * r / 2);
  }
  const double t = 0.8;
  const auto [a, b] = gaussian_ode(t);
  // A1 / A solves y' = -i B y
  Complex ratio = 1.0;
  {
    const int steps = 20000;
    const double h = t / steps;
    for (int s = 0; s < steps; ++s) {
      auto f = [&](double tau, Complex y) { return -1i * std::tan(Complex(pi / 4, -tau)) * y; };
      const double tau = s * h;
      const Complex k1 = f(tau, ratio), k2 = f(tau + h / 2, ratio + h / 2 * k1), k3 = f(tau + h / 2, ratio + h / 2 * k2),
                    k4 = f(tau + h, ratio + h * k3);
      ratio += h / 6 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
  }
  auto out = mehler_apply_vector(RadialField(g, chi), t);
  std::vector<Complex> expect(g->size());
  for (std::size_t i = 0; i < g->size(); ++i) {
    const double r = g->radius(i);
    expect[i] = a * ratio * r * r * std::exp(-b * r * r / 2.0);
  }
  CHECK(l2(out - RadialField(g, expect)) < 1e-8);
}

TEST_CASE("Heisenberg residuals") {
  auto g = default_grid();
  auto u = gaussian(g);
  CHECK(heisenberg_residual(u, 1.0, 1e-3, Galilean::J) < 1e-5);
  CHECK(heisenberg_residual(u, 1.0, 1e-3, Galilean::H) < 1e-5);
  CHECK(heisenberg_residual(u, 0.0, 1e-3, Galilean::J) == 0.0);
  CHECK(heisenberg_residual(u, 0.0, 1e-3, Galilean::H) == 0.0);
  for (const auto& spec : {ProfileSpec::bump(1.0, 0.5, 2.0), ProfileSpec::concentrate(2.0)}) {
    auto f = sample_profile(spec, g);
    for (double t : {0.5, 1.0}) {
      CHECK(heisenberg_residual(f, t, 1e-3, Galilean::J) < 1e-4);
      CHECK(heisenberg_residual(f, t, 1e-3, Galilean::H) < 1e-4);
    }
  }
  CHECK_THROWS_AS(heisenberg_residual(RadialField(g), 1.0, 1e-3, Galilean::J), Error);
}

TEST_CASE("embedding ratios") {
  auto g = default_grid();
  auto u = gaussian(g);
  const double base = embedding_ratio(u, 0.0, 10.0, 30.0 / 13.0);
  CHECK(std::isfinite(base));
  CHECK(base > 0.0);
  CHECK(rel_err(embedding_ratio(3.0 * u, 0.0, 10.0, 30.0 / 13.0), base) < 1e-12);
  for (double t : {0.5, 1.0}) CHECK(embedding_ratio(u, t, 10.0, 30.0 / 13.0) <= 3.0 * base);
  CHECK(std::isfinite(embedding_ratio(u, 0.5, 18.0, 18.0 / 7.0)));
  CHECK_THROWS_AS(embedding_ratio(u, 0.5, 6.0, 2.0), Error);
}
