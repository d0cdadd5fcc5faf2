#include "rnls/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "rnls/cutoff.hpp"
#include "rnls/error.hpp"
#include "rnls/norms.hpp"

namespace rnls {

namespace {

constexpr double four_pi = 4.0 * std::numbers::pi;

void require_nonempty(const SnapshotStream& stream) {
  if (stream.empty()) fail(ErrorKind::range, "empty snapshot stream");
}

void require_origin(const SnapshotStream& stream) {
  require_nonempty(stream);
  if (std::abs(stream.time(0)) > 1e-12) fail(ErrorKind::range, "stream must start at t = 0");
}

// Snapshot samples in ascending time order.
struct Series {
  std::vector<double> t;
  std::vector<double> v;
};

template <typename F>
Series ascending(const SnapshotStream& stream, F value) {
  Series s;
  for (std::size_t i = 0; i < stream.size(); ++i) {
    s.t.push_back(stream.time(i));
    s.v.push_back(value(i));
  }
  if (s.t.size() > 1 && s.t.front() > s.t.back()) {
    std::reverse(s.t.begin(), s.t.end());
    std::reverse(s.v.begin(), s.v.end());
  }
  return s;
}

double interpolate(std::span<const double> t, std::span<const double> v, std::size_t i, double x) {
  const double f = (x - t[i]) / (t[i + 1] - t[i]);
  return v[i] + f * (v[i + 1] - v[i]);
}

void require_window(std::span<const double> t, TimeWindow w) {
  if (t.empty()) fail(ErrorKind::range, "empty series");
  const double tol = 1e-9 * std::max(1.0, std::abs(t.back() - t.front()));
  if (!(w.begin <= w.end) || w.begin < t.front() - tol || w.end > t.back() + tol) {
    fail(ErrorKind::range, "window [" + std::to_string(w.begin) + ", " + std::to_string(w.end) +
                               "] outside the stream range");
  }
}

// Samples inside the window with interpolated end points.
Series clip(std::span<const double> t, std::span<const double> v, TimeWindow w) {
  require_window(t, w);
  Series s;
  const double tol = 1e-9 * std::max(1.0, std::abs(t.back() - t.front()));
  const double a = std::clamp(w.begin, t.front(), t.back());
  const double b = std::clamp(w.end, t.front(), t.back());
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i] > a + tol && (s.t.empty())) {
      s.t.push_back(a);
      s.v.push_back(interpolate(t, v, i - 1, a));
    }
    if (t[i] >= a - tol && t[i] <= b + tol) {
      s.t.push_back(t[i]);
      s.v.push_back(v[i]);
    } else if (t[i] > b + tol) {
      s.t.push_back(b);
      s.v.push_back(interpolate(t, v, i - 1, b));
      break;
    }
  }
  return s;
}

double trapezoid(const Series& s) {
  double sum = 0.0;
  for (std::size_t i = 0; i + 1 < s.t.size(); ++i) sum += 0.5 * (s.t[i + 1] - s.t[i]) * (s.v[i] + s.v[i + 1]);
  return sum;
}

}  // namespace

double integrate_series(std::span<const double> times, std::span<const double> values, TimeWindow window) {
  if (times.size() != values.size()) fail(ErrorKind::range, "series lengths differ");
  return trapezoid(clip(times, values, window));
}

std::vector<SeriesPoint> decay_margin(const SnapshotStream& stream) {
  require_origin(stream);
  const double e10 = stream.ledger(0).E1;
  std::vector<SeriesPoint> out;
  for (const auto& l : stream.ledgers()) {
    const double c = std::cosh(l.t);
    out.push_back({l.t, 3.0 * e10 / std::pow(c, 6.0) - l.pot6});
  }
  return out;
}

IdentityAudit energy_identity_residual(const SnapshotStream& stream, double slack) {
  require_origin(stream);
  if (stream.size() < 3) fail(ErrorKind::range, "identity audit needs at least three snapshots");
  const auto& L = stream.ledgers();
  const double e10 = L.front().E1;
  const double scale = e10 > 0.0 ? e10 : 1.0;
  IdentityAudit audit;
  for (std::size_t k = 1; k + 1 < L.size(); ++k) {
    const double dt = L[k + 1].t - L[k - 1].t;
    const double rhs = -2.0 / 3.0 * std::sinh(2.0 * L[k].t) * L[k].pot6;
    const double r1 = ((L[k + 1].calE1 - L[k - 1].calE1) / dt - rhs) / scale;
    const double r2 = ((L[k + 1].calE2 - L[k - 1].calE2) / dt - rhs) / scale;
    audit.residual1.push_back({L[k].t, r1});
    audit.residual2.push_back({L[k].t, r2});
    audit.max_residual = std::max({audit.max_residual, std::abs(r1), std::abs(r2)});
  }
  audit.calE1_max_rise = -std::numeric_limits<double>::infinity();
  audit.calE2_max_rise = -std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k + 1 < L.size(); ++k) {
    audit.calE1_max_rise = std::max(audit.calE1_max_rise, (L[k + 1].calE1 - L[k].calE1) / scale);
    audit.calE2_max_rise = std::max(audit.calE2_max_rise, (L[k + 1].calE2 - L[k].calE2) / scale);
  }
  audit.monotone = audit.calE1_max_rise <= slack && audit.calE2_max_rise <= slack;
  const double x0 = std::sqrt(L.front().moment2);
  for (const auto& l : L) {
    const double h = std::sqrt(std::max(l.H_norm_sq(), 0.0));
    audit.h_bound_ratio = std::max(audit.h_bound_ratio, x0 > 0.0 ? h / x0 : (h > 0.0 ? INFINITY : 0.0));
  }
  return audit;
}

double local_mass(const RadialField& field, double R) {
  const auto& grid = field.grid();
  if (!(R > 0.0) || R > grid.r_max() / 2.0) fail(ErrorKind::range, "local mass radius must lie in (0, r_max/2]");
  double sum = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double chi = local_mass_weight(grid.radius(i) / R);
    if (chi == 0.0) break;
    sum += trapezoid_weight(grid, i) * chi * chi * std::norm(field[i]);
  }
  return std::sqrt(four_pi * sum);
}

LocalMassAudit local_mass_audit(const SnapshotStream& stream, double R) {
  require_nonempty(stream);
  LocalMassAudit audit;
  std::vector<double> mass(stream.size());
  std::vector<double> grad(stream.size());
  for (std::size_t k = 0; k < stream.size(); ++k) {
    mass[k] = local_mass(stream.field(k), R);
    grad[k] = std::sqrt(stream.ledger(k).grad2);
    if (grad[k] > 0.0) audit.hardy_ratio = std::max(audit.hardy_ratio, mass[k] / (R * grad[k]));
  }
  for (std::size_t k = 0; k + 1 < stream.size(); ++k) {
    const double rate = std::abs(mass[k + 1] - mass[k]) / std::abs(stream.time(k + 1) - stream.time(k));
    const double bound = std::max(grad[k], grad[k + 1]) / R;
    if (bound > 0.0) audit.lipschitz_ratio = std::max(audit.lipschitz_ratio, rate / bound);
  }
  return audit;
}

MorawetzResult morawetz(const SnapshotStream& stream, TimeWindow window, double A) {
  require_nonempty(stream);
  if (!(A >= 1.0)) fail(ErrorKind::range, "Morawetz parameter A must be >= 1");
  if (!(window.length() > 0.0)) fail(ErrorKind::range, "Morawetz window must have positive length");
  const double radius = A * std::sqrt(window.length());
  const auto& grid = stream.field(0).grid();
  if (radius > grid.r_max()) fail(ErrorKind::range, "Morawetz radius exceeds the grid");

  std::vector<double> f(grid.size());
  const auto s = ascending(stream, [&](std::size_t k) {
    const auto& field = stream.field(k);
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const double r = grid.radius(i);
      const double a2 = std::norm(field[i]);
      f[i] = a2 * a2 * a2 / (r * r * r * r * r);
    }
    return four_pi * integrate_to_radius(grid, f, radius);
  });
  MorawetzResult m;
  m.lhs = integrate_series(s.t, s.v, window);
  double sup = 0.0;
  const double tol = 1e-9 * std::max(1.0, window.length());
  for (const auto& l : stream.ledgers()) {
    if (l.t >= window.begin - tol && l.t <= window.end + tol) sup = std::max(sup, l.grad2 + l.moment2 + l.pot6);
  }
  m.envelope = radius * sup;
  m.ratio = m.envelope > 0.0 ? m.lhs / m.envelope : 0.0;
  return m;
}

double spacetime_norm(const SnapshotStream& stream, TimeWindow window, double q, double r) {
  require_nonempty(stream);
  if (!(q >= 1.0) || std::isinf(q)) fail(ErrorKind::range, "time exponent must be finite and >= 1");
  const auto s = ascending(stream, [&](std::size_t k) { return std::pow(lp_norm(stream.field(k), r), q); });
  return std::pow(integrate_series(s.t, s.v, window), 1.0 / q);
}

IntervalPartition partition_intervals(std::span<const double> times, std::span<const double> norms, TimeWindow window,
                                      double eta1) {
  if (!(eta1 > 0.0 && eta1 < 1.0)) fail(ErrorKind::range, "eta1 must lie in (0, 1)");
  if (times.size() != norms.size()) fail(ErrorKind::range, "series lengths differ");
  std::vector<double> power(norms.size());
  for (std::size_t i = 0; i < norms.size(); ++i) power[i] = std::pow(norms[i], 10.0);
  const auto s = clip(times, power, window);
  const double target = std::pow(eta1, 10.0);

  IntervalPartition p;
  p.eta1 = eta1;
  const double total = trapezoid(s);
  if (total < target) {
    p.sub_threshold = true;
    p.intervals.push_back({window.begin, window.end, std::pow(total, 0.1), false});
    return p;
  }
  double begin = s.t.front();
  double acc = 0.0;
  for (std::size_t i = 0; i + 1 < s.t.size(); ++i) {
    acc += 0.5 * (s.t[i + 1] - s.t[i]) * (s.v[i] + s.v[i + 1]);
    if (acc >= target) {
      const double norm = std::pow(acc, 0.1);
      p.intervals.push_back({begin, s.t[i + 1], norm, norm > 2.0 * eta1});
      begin = s.t[i + 1];
      acc = 0.0;
    }
  }
  if (begin < s.t.back()) p.intervals.push_back({begin, s.t.back(), std::pow(acc, 0.1), false});
  return p;
}

IntervalPartition partition_intervals(const SnapshotStream& stream, TimeWindow window, double eta1) {
  require_nonempty(stream);
  const auto s = ascending(stream, [&](std::size_t k) { return stream.ledger(k).L10; });
  return partition_intervals(s.t, s.v, window, eta1);
}

IntervalSum morawetz_interval_sum(std::span<const Interval> intervals, TimeWindow window) {
  if (!(window.length() > 0.0)) fail(ErrorKind::range, "window must have positive length");
  IntervalSum s;
  for (const auto& I : intervals) s.sum += std::sqrt(std::max(I.length(), 0.0));
  s.ratio = s.sum / std::sqrt(window.length());
  return s;
}

double decay_horizon(double E1_0, double eps) {
  if (!(eps > 0.0)) fail(ErrorKind::range, "decay horizon needs eps > 0");
  if (!(E1_0 > 0.0)) return 0.0;
  const double c = std::pow(3.0 * E1_0, 1.0 / 6.0) / eps;
  return std::acosh(std::max(1.0, c));
}

}  // namespace rnls
