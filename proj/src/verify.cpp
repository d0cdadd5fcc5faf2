#include "rnls/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "rnls/diagnostics.hpp"
#include "rnls/error.hpp"
#include "rnls/galilean.hpp"
#include "rnls/norms.hpp"

namespace rnls {

namespace {

Check upper(std::string suite, std::string name, double value, double bound) {
  return {std::move(suite), std::move(name), value, bound, true, value <= bound};
}

Check lower(std::string suite, std::string name, double value, double bound) {
  return {std::move(suite), std::move(name), value, bound, false, value >= bound};
}

double l2(const RadialField& f) { return std::sqrt(mass_squared(f)); }

void conservation(const SnapshotStream& s, std::vector<Check>& out) {
  const auto& l0 = s.ledger(0);
  double dm = 0.0, de = 0.0;
  for (const auto& l : s.ledgers()) {
    dm = std::max(dm, l0.M > 0.0 ? std::abs(l.M - l0.M) / l0.M : std::abs(l.M));
    de = std::max(de, l0.E != 0.0 ? std::abs(l.E - l0.E) / std::abs(l0.E) : std::abs(l.E));
  }
  out.push_back(upper("conservation", "mass_drift", dm, 1e-12));
  out.push_back(upper("conservation", "energy_drift", de, 1e-5));
}

double h_bound(const SnapshotStream& s) {
  const double x0 = std::sqrt(s.ledger(0).moment2);
  double worst = 0.0;
  for (const auto& l : s.ledgers()) worst = std::max(worst, x0 > 0.0 ? std::sqrt(l.H_norm_sq()) / x0 : 0.0);
  return worst;
}

void decay(const SnapshotStream& s, std::vector<Check>& out) {
  const double E1 = s.ledger(0).E1;
  const double scale = E1 > 0.0 ? E1 : 1.0;
  double margin = std::numeric_limits<double>::infinity();
  for (const auto& p : decay_margin(s)) margin = std::min(margin, p.value / scale);
  out.push_back(lower("decay", "potential_margin", margin, -1e-6));
  const auto audit = energy_identity_residual(s, 1e-8);
  out.push_back(upper("decay", "calE1_max_rise", audit.calE1_max_rise, 1e-8));
  out.push_back(upper("decay", "calE2_max_rise", audit.calE2_max_rise, 1e-8));
  out.push_back(upper("decay", "identity_residual", audit.max_residual, 1e-3));
  out.push_back(upper("decay", "h_bound_ratio", h_bound(s), 1.0 + 1e-6));
}

void morawetz_suite(const SnapshotStream& s, std::vector<Check>& out) {
  const double r_max = s.field(0).grid().r_max();
  double hardy = 0.0, lip = 0.0;
  for (double R : {0.5, 1.0, 2.0, 4.0}) {
    if (R > r_max / 2.0) continue;
    const auto a = local_mass_audit(s, R);
    hardy = std::max(hardy, a.hardy_ratio);
    lip = std::max(lip, a.lipschitz_ratio);
  }
  out.push_back(upper("morawetz", "hardy_ratio", hardy, 1.05));
  out.push_back(upper("morawetz", "lipschitz_ratio", lip, 1.05));
  const double t0 = std::min(s.time(0), s.time(s.size() - 1));
  const double t1 = std::max(s.time(0), s.time(s.size() - 1));
  if (t1 > t0) {
    const double A = std::min(2.0, r_max / std::sqrt(t1 - t0));
    const auto m = morawetz(s, {t0, t1}, std::max(A, 1.0));
    out.push_back(lower("morawetz", "morawetz_ratio", std::isfinite(m.ratio) ? m.ratio : NAN, 0.0));
  }
}

void galilean(const RunConfig& config, const SnapshotStream& s, std::vector<Check>& out, bool with_h_bound) {
  const auto& u = s.field(0);
  double agree = 0.0, recon = 0.0;
  std::vector<Complex> xu(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) xu[i] = u.grid().radius(i) * u[i];
  const RadialField x(u.grid_ptr(), xu, u.time());
  const double xnorm = l2(x);
  for (double t : {0.3, 0.7, 1.5}) {
    for (auto which : {Galilean::J, Galilean::H}) {
      const auto d = galilean_apply(u, t, which, GalileanMethod::direct);
      const auto f = galilean_apply(u, t, which, GalileanMethod::factorized);
      agree = std::max(agree, l2(d - f));
    }
    const auto r = std::cosh(t) * galilean_apply(u, t, Galilean::H) - std::sinh(t) * galilean_apply(u, t, Galilean::J);
    recon = std::max(recon, l2(r - x));
  }
  out.push_back(upper("galilean", "direct_vs_factorized", agree, 1e-8));
  out.push_back(upper("galilean", "reconstruction", xnorm > 0.0 ? recon : 0.0, 1e-8));
  if (!u.is_zero()) {
    double hj = 0.0, hh = 0.0;
    for (double t : {0.5, 1.0}) {
      hj = std::max(hj, heisenberg_residual(u, t, config.dt, Galilean::J));
      hh = std::max(hh, heisenberg_residual(u, t, config.dt, Galilean::H));
    }
    out.push_back(upper("galilean", "heisenberg_J", hj, 1e-4));
    out.push_back(upper("galilean", "heisenberg_H", hh, 1e-4));
  }
  if (with_h_bound) out.push_back(upper("galilean", "h_bound_ratio", h_bound(s), 1.0 + 1e-6));
}

}  // namespace

std::string to_string(Suite s) {
  switch (s) {
    case Suite::conservation: return "conservation";
    case Suite::decay: return "decay";
    case Suite::morawetz: return "morawetz";
    case Suite::galilean: return "galilean";
    case Suite::all: return "all";
  }
  return "all";
}

Suite suite_from_string(const std::string& name) {
  for (auto s : {Suite::conservation, Suite::decay, Suite::morawetz, Suite::galilean, Suite::all}) {
    if (to_string(s) == name) return s;
  }
  fail(ErrorKind::config, "unknown suite '" + name + "'");
}

std::vector<Check> verify_suite(const RunConfig& config, const SnapshotStream& stream, Suite suite) {
  if (stream.empty()) fail(ErrorKind::range, "empty snapshot stream");
  std::vector<Check> out;
  const bool every = suite == Suite::all;
  if (every || suite == Suite::conservation) conservation(stream, out);
  if (every || suite == Suite::decay) decay(stream, out);
  if (every || suite == Suite::morawetz) morawetz_suite(stream, out);
  if (every || suite == Suite::galilean) galilean(config, stream, out, !every);
  return out;
}

bool all_pass(const std::vector<Check>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

nlohmann::json to_json(const std::vector<Check>& checks) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : checks) {
    arr.push_back({{"suite", c.suite},
                   {"name", c.name},
                   {"value", c.value},
                   {"bound", c.bound},
                   {"relation", c.upper ? "<=" : ">="},
                   {"pass", c.pass}});
  }
  return arr;
}

}  // namespace rnls
