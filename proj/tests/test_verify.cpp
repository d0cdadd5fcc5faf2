#include <doctest.h>

#include <algorithm>

#include "rnls/error.hpp"
#include "rnls/evolver.hpp"
#include "rnls/verify.hpp"
#include "support.hpp"

using namespace rnls;
using namespace rnls::test;

namespace {

RunConfig wide_config() {
  RunConfig c;
  c.r_max = 64.0;
  c.n = 4096;
  return c;
}

const Check& find(const std::vector<Check>& checks, const std::string& name) {
  const auto it = std::find_if(checks.begin(), checks.end(), [&](const Check& c) { return c.name == name; });
  REQUIRE(it != checks.end());
  return *it;
}

}  // namespace

TEST_CASE("suite names") {
  for (auto s : {Suite::conservation, Suite::decay, Suite::morawetz, Suite::galilean, Suite::all}) {
    CHECK(suite_from_string(to_string(s)) == s);
  }
  CHECK_THROWS_AS(suite_from_string("energy"), Error);
}

TEST_CASE("every suite passes on the Gaussian run") {
  const auto c = wide_config();
  const auto s = evolve(c);
  const auto checks = verify_suite(c, s, Suite::all);
  for (const auto& k : checks) {
    INFO(k.suite << "/" << k.name << " = " << k.value);
    CHECK(k.pass);
  }
  CHECK(all_pass(checks));
  CHECK(find(checks, "mass_drift").value <= 1e-12);
  CHECK(find(checks, "energy_drift").value <= 1e-5);
  CHECK(find(checks, "potential_margin").value >= -1e-6);
  CHECK(find(checks, "morawetz_ratio").value > 0.0);

  const auto only = verify_suite(c, s, Suite::conservation);
  CHECK(only.size() == 2);
  const auto doc = to_json(only);
  CHECK(doc.size() == 2);
  CHECK(doc[0]["relation"] == "<=");
}

TEST_CASE("conservation fails on a tampered stream") {
  const auto c = wide_config();
  auto fs = evolve(gaussian(make_grid(c.r_max, c.n)), EvolveOptions{.duration = 0.1}).fields();
  fs.back() *= Complex(1.0 + 1e-9);
  const auto s = SnapshotStream::from_fields(fs, 0.01);
  const auto checks = verify_suite(c, s, Suite::conservation);
  CHECK_FALSE(find(checks, "mass_drift").pass);
  CHECK_FALSE(all_pass(checks));

  CHECK_THROWS_AS(verify_suite(c, SnapshotStream(1e-3, 10), Suite::all), Error);
}
