#include <doctest.h>

#include <cmath>
#include <cstring>

#include "rnls/error.hpp"
#include "rnls/evolver.hpp"
#include "rnls/galilean.hpp"
#include "rnls/ledger.hpp"
#include "rnls/linear_flow.hpp"
#include "rnls/norms.hpp"
#include "support.hpp"

using namespace rnls;
using namespace rnls::test;

namespace {
double l2(const RadialField& f) { return std::sqrt(mass_squared(f)); }
}  // namespace

TEST_CASE("ledger closed forms for the unit Gaussian") {
  auto l = ledger(gaussian(default_grid()));
  const double e1 = 0.5 * gauss_grad_sq + gauss_pot6 / 3.0;
  const double e2 = 0.5 * gauss_moment_sq;
  CHECK(rel_err(l.E1, e1) < 1e-6);
  CHECK(l.E1 == doctest::Approx(4.53345).epsilon(1e-5));
  CHECK(rel_err(l.E2, e2) < 1e-6);
  CHECK(l.E2 == doctest::Approx(4.1762).epsilon(1e-4));
  CHECK(l.calE1 == l.E1);
  CHECK(l.calE2 == l.E2);
  CHECK(std::abs(l.E - (l.E1 - l.E2)) <= 1e-10 * std::abs(l.E));
  CHECK(rel_err(l.M, std::pow(pi, 0.75)) < 1e-6);
  CHECK(std::abs(l.cross) < 1e-12);
}

TEST_CASE("ledger of the zero field") {
  auto l = ledger(RadialField(default_grid(), 0.7));
  for (double v : {l.M, l.E, l.E1, l.E2, l.calE1, l.calE2, l.pot6, l.L10, l.tail_mass}) CHECK(v == 0.0);
}

TEST_CASE("ledger Galilean norms match the operators") {
  auto g = default_grid();
  auto u = sample_profile(ProfileSpec::bump(0.9, 0.7, 2.0), g);
  auto v = linear_flow(u, 0.6, 1e-3);
  auto l = ledger(v);
  CHECK(rel_err(l.J_norm_sq(), mass_squared(galilean_apply(v, v.time(), Galilean::J))) < 1e-8);
  CHECK(rel_err(l.H_norm_sq(), mass_squared(galilean_apply(v, v.time(), Galilean::H))) < 1e-8);
  CHECK(std::abs((l.calE1 - l.calE2) - l.E) <= 1e-8 * std::abs(l.E));
  CHECK(l.calE1 >= 0.0);
  CHECK(l.calE2 >= 0.0);
}

TEST_CASE("step basics") {
  auto g = default_grid();
  CHECK(step(RadialField(g), 1e-3).is_zero());
  auto tiny = gaussian(g, 1e-6);
  auto a = step(tiny, 1e-3, Splitting::strang);
  auto b = linear_flow(tiny, 1e-3, 1e-3, Splitting::strang);
  double err = 0.0;
  for (std::size_t i = 0; i < g->size(); ++i) err = std::max(err, std::abs(a[i] - b[i]));
  CHECK(err < 1e-18);
  CHECK(a.time() == 1e-3);
  try {
    step(gaussian(g), 1.0);
    FAIL("expected config error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::config);
  }
}

TEST_CASE("mass is conserved to round-off") {
  auto g = default_grid();
  auto u = gaussian(g);
  EvolveOptions opt;
  opt.duration = 1.0;
  opt.stride = 1000;
  auto s = evolve(u, opt);
  REQUIRE(s.size() == 2);
  CHECK(s.step_count() == 1000);
  CHECK(std::abs(s.ledger(1).M - s.ledger(0).M) <= 1e-12 * s.ledger(0).M);
}

TEST_CASE("evolve stream layout and determinism") {
  RunConfig c;
  c.t_end = 0.0;
  auto single = evolve(c);
  CHECK(single.size() == 1);
  CHECK(single.time(0) == 0.0);

  c.t_end = 0.2;
  c.snapshot_stride = 20;
  auto a = evolve(c);
  auto b = evolve(c);
  REQUIRE(a.size() == 11);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a.time(i) == static_cast<double>(a.step(i)) * c.dt);
    CHECK(std::memcmp(a.field(i).values().data(), b.field(i).values().data(), sizeof(Complex) * a.field(i).size()) ==
          0);
    if (i > 0) CHECK(a.time(i) > a.time(i - 1));
    CHECK(a.tail_mass(i) < c.tail_mass_threshold);
  }
  auto back = evolve(c, true);
  CHECK(back.time(back.size() - 1) == doctest::Approx(-0.2));
  CHECK(back.dt() < 0.0);
}

TEST_CASE("evolve rejects ragged spans") {
  auto u = gaussian(default_grid());
  EvolveOptions opt;
  opt.duration = 0.0105;
  CHECK_THROWS_AS(evolve(u, opt), Error);
  opt.duration = 0.015;
  opt.stride = 10;
  CHECK_THROWS_AS(evolve(u, opt), Error);
}

TEST_CASE("backward-forward identity") {
  auto g = default_grid();
  auto u = gaussian(g);
  EvolveOptions opt;
  opt.duration = 1.0;
  opt.stride = 1000;
  auto fwd = evolve(u, opt);
  opt.duration = -1.0;
  auto bwd = evolve(fwd.field(1), opt);
  CHECK(bwd.time(1) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(l2(bwd.field(1) - u) < 1e-8);
}

TEST_CASE("truncation guard reports the offending time") {
  auto u = gaussian(default_grid());
  EvolveOptions opt;
  opt.duration = 2.0;
  opt.stride = 100;
  try {
    evolve(u, opt);
    FAIL("expected truncation");
  } catch (const TruncationError& e) {
    CHECK(e.time() > 1.0);
    CHECK(e.time() <= 2.0);
    CHECK(e.tail_mass() > 1e-6);
  }
}

TEST_CASE("energy drift on the wide grid") {
  RunConfig c;
  c.r_max = 32.0;
  c.n = 2048;
  c.snapshot_stride = 100;
  auto s = evolve(c);
  const double e0 = s.ledger(0).E;
  double drift = 0.0;
  for (const auto& l : s.ledgers()) drift = std::max(drift, std::abs(l.E - e0) / std::abs(e0));
  CHECK(drift <= 1e-5);
}

TEST_CASE("convergence order") {
  RunConfig c;
  c.t_end = 1.0;
  c.dt = 4e-3;
  c.snapshot_stride = 1;
  auto order = convergence_order(c);
  REQUIRE(order.has_value());
  CHECK(*order >= 1.8);
  CHECK(*order <= 2.2);

  c.profile = ProfileSpec::gaussian(1e-6, 1.0);
  c.splitting = Splitting::strang;
  auto linear = convergence_order(c);
  REQUIRE(linear.has_value());
  CHECK(*linear >= 1.8);
  CHECK(*linear <= 2.2);

  c.profile = ProfileSpec::zero();
  CHECK_FALSE(convergence_order(c).has_value());
}
