#include <doctest.h>

#include <cmath>

#include "rnls/config.hpp"
#include "rnls/cutoff.hpp"
#include "rnls/error.hpp"
#include "rnls/norms.hpp"
#include "rnls/sine_transform.hpp"
#include "support.hpp"

using namespace rnls;
using namespace rnls::test;

TEST_CASE("make_grid") {
  auto g = make_grid(16.0, 1024);
  CHECK(g->dr() == 0.015625);
  CHECK(g->wavenumber(0) == doctest::Approx(pi / 16.0).epsilon(1e-15));
  CHECK(g->radius(1023) == 16.0);
  for (std::size_t m = 1; m < g->size(); ++m) CHECK(g->wavenumber(m) > g->wavenumber(m - 1));

  auto g2 = make_grid(32.0, 2048);
  CHECK(g2->dr() == 0.015625);
  CHECK(g2->k_max() == doctest::Approx(64.0 * pi).epsilon(1e-15));

  for (auto [r, n] : {std::pair{16.0, std::size_t{1000}}, {16.0, std::size_t{4}}, {0.0, std::size_t{64}}, {-1.0, std::size_t{64}}}) {
    try {
      make_grid(r, n);
      FAIL("expected a configuration error");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::config);
    }
  }
}

TEST_CASE("field invariants") {
  auto g = make_grid(4.0, 8);
  CHECK_THROWS_AS(RadialField(g, std::vector<Complex>(7)), Error);
  std::vector<Complex> bad(8);
  bad[3] = Complex(std::nan(""), 0.0);
  CHECK_THROWS_AS(RadialField(g, bad), Error);
  RadialField z(g);
  CHECK(z.is_zero());
  CHECK_THROWS_AS(z += RadialField(make_grid(8.0, 8)), Error);
}

TEST_CASE("cutoff shape") {
  CHECK(cutoff(0.0) == 1.0);
  CHECK(cutoff(1.0) == 1.0);
  CHECK(cutoff(2.0) == 0.0);
  CHECK(cutoff(1.5) == doctest::Approx(0.5));
  CHECK(local_mass_weight(0.5) == 1.0);
  CHECK(local_mass_weight(1.0) == 0.0);
  for (double s = 1.01; s < 2.0; s += 0.01) {
    const double h = 1e-6;
    CHECK(cutoff_derivative(s) == doctest::Approx((cutoff(s + h) - cutoff(s - h)) / (2 * h)).epsilon(1e-5));
    CHECK(cutoff_derivative(s) <= 0.0);
  }
}

TEST_CASE("gaussian closed forms") {
  auto g = default_grid();
  auto u = gaussian(g);
  CHECK(rel_err(mass_squared(u), gauss_mass_sq) < 1e-6);
  CHECK(rel_err(lp_norm(u, 2.0), std::pow(pi, 0.75)) < 1e-6);
  CHECK(lp_norm(u, 2.0) == doctest::Approx(2.3597).epsilon(1e-4));
  CHECK(rel_err(std::pow(lp_norm(u, 6.0), 6.0), gauss_pot6) < 1e-6);
  CHECK(rel_err(gradient_norm_sq(u), gauss_grad_sq) < 1e-6);
  CHECK(rel_err(second_moment_squared(u), gauss_moment_sq) < 1e-6);
  CHECK(rel_err(lp_norm(u, infinity_exponent), 1.0) < 1e-10);
  CHECK(rel_err(std::abs(origin_value(u)), 1.0) < 1e-10);
  const double sigma = std::sqrt(gauss_mass_sq + gauss_grad_sq) + std::sqrt(gauss_moment_sq);
  CHECK(rel_err(sigma_norm(u), sigma) < 1e-6);
}

TEST_CASE("zero profile") {
  auto z = sample_profile(ProfileSpec::zero(), default_grid());
  CHECK(z.is_zero());
  for (double p : {1.0, 2.0, 6.0, 10.0, infinity_exponent}) CHECK(lp_norm(z, p) == 0.0);
  CHECK(sigma_norm(z) == 0.0);
  CHECK(gradient_norm_sq(z) == 0.0);
  CHECK(tail_mass_fraction(z) == 0.0);
}

TEST_CASE("lp_norm rejects p < 1") {
  auto u = gaussian(default_grid());
  try {
    lp_norm(u, 0.5);
    FAIL("expected range error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::range);
  }
}

TEST_CASE("concentrate(8) holds most of its L6 mass inside r < 1/8") {
  auto g = default_grid();
  auto u = sample_profile(ProfileSpec::concentrate(8.0), g);
  const double inside = std::pow(ball_lp_norm(u, 6.0, 1.0 / 8.0), 6.0);
  const double total = std::pow(lp_norm(u, 6.0), 6.0);
  CHECK(inside > 0.5 * total);
  // |u|^6 = 8^3 exp(-3 (8r)^2): the fraction is the chi-square(3) law at 6.
  const double expected = gaussian_moment2(3.0, 1.0) / gaussian_moment2(3.0, 50.0);
  // trapezoid with eight samples across the bump width
  CHECK(inside / total == doctest::Approx(expected).epsilon(1e-2));
}

TEST_CASE("sigma_norm properties") {
  auto g = default_grid();
  auto u = sample_profile(ProfileSpec::bump(0.7, 0.8, 3.0), g);
  for (Complex c : {Complex(2.0, 0.0), Complex(0.0, -3.5), Complex(1e-3, 1e-3)}) {
    CHECK(rel_err(sigma_norm(c * u), std::abs(c) * sigma_norm(u)) < 1e-12);
  }
  auto a = sample_profile(ProfileSpec::concentrate(8.0), g);
  auto b = sample_profile(ProfileSpec::concentrate(16.0), g);
  CHECK(rel_err(std::sqrt(gradient_norm_sq(b)), std::sqrt(gradient_norm_sq(a))) < 1e-2);
}

TEST_CASE("Parseval") {
  auto g = default_grid();
  for (const auto& spec : {ProfileSpec::gaussian(1.0, 1.0), ProfileSpec::bump(1.0, 0.5, 4.0), ProfileSpec::concentrate(16.0)}) {
    auto u = sample_profile(spec, g);
    u *= Complex(0.6, 0.8);
    const auto y = dst_forward(u);
    double s = 0.0;
    for (const auto& c : y) s += std::norm(c);
    const double spectral = 4.0 * pi * g->dr() * s / (2.0 * static_cast<double>(g->size()));
    CHECK(rel_err(mass_squared(u), spectral) < 1e-10);
  }
}

TEST_CASE("truncation guard") {
  auto g = default_grid();
  try {
    sample_profile(ProfileSpec::gaussian(1.0, 6.0), g);
    FAIL("expected truncation error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::truncation);
  }
  CHECK_NOTHROW(sample_profile(ProfileSpec::gaussian(1.0, 1.0), g));
}

TEST_CASE("local norms") {
  auto g = default_grid();
  auto u = gaussian(g);
  // ||u||_{L2(|x|<1)}^2 = 4 pi int_0^1 s^2 e^{-s^2}
  CHECK(rel_err(std::pow(ball_lp_norm(u, 2.0, 1.0), 2.0), 4 * pi * gaussian_moment2(1.0, 1.0)) < 1e-5);
  CHECK(rel_err(std::pow(ball_lp_norm(u, 2.0, 0.7), 2.0), 4 * pi * gaussian_moment2(1.0, 0.7)) < 1e-3);
  const double ann = std::pow(annulus_lp_norm(u, 6.0, 0.5, 1.5), 6.0);
  CHECK(rel_err(ann, 4 * pi * (gaussian_moment2(3.0, 1.5) - gaussian_moment2(3.0, 0.5))) < 1e-4);
  // |grad u|^2 = r^2 e^{-r^2}
  auto moment4 = [](double a) {
    // int_0^a s^4 e^{-s^2} ds
    return 1.5 * gaussian_moment2(1.0, a) - 0.5 * a * a * a * std::exp(-a * a);
  };
  CHECK(rel_err(std::pow(ball_gradient_norm(u, 1.2), 2.0), 4 * pi * moment4(1.2)) < 1e-4);
  CHECK_THROWS_AS(ball_lp_norm(u, 2.0, 17.0), Error);
}

TEST_CASE("config round trip and validation") {
  RunConfig c;
  c.validate();
  auto back = config_from_json(to_json(c));
  CHECK(to_json(back) == to_json(c));
  CHECK(c.persistence_constant() == doctest::Approx(0.05 * std::pow(0.5, 1.5) * 0.0625));

  auto bad = to_json(c);
  bad["eta3"] = 0.1;
  try {
    config_from_json(bad);
    FAIL("expected config error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::config);
  }
  auto unknown = to_json(c);
  unknown["colour"] = 1;
  CHECK_THROWS_AS(config_from_json(unknown), Error);
  auto ragged = to_json(c);
  ragged["t_end"] = 0.0015;
  CHECK_THROWS_AS(config_from_json(ragged), Error);
  auto zero_end = to_json(c);
  zero_end["t_end"] = 0.0;
  CHECK(config_from_json(zero_end).steps() == 0);
}
