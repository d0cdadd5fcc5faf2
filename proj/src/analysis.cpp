#include "rnls/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <numbers>
#include <string>

#include "rnls/cutoff.hpp"
#include "rnls/error.hpp"
#include "rnls/littlewood_paley.hpp"
#include "rnls/norms.hpp"
#include "rnls/sine_transform.hpp"

namespace rnls {

namespace {

bool inside(double t, TimeWindow w) {
  const double tol = 1e-9 * std::max(1.0, std::max(std::abs(w.begin), std::abs(w.end)));
  return t >= w.begin - tol && t <= w.end + tol;
}

std::vector<std::size_t> snapshots_in(const SnapshotStream& stream, TimeWindow w) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < stream.size(); ++i) {
    if (inside(stream.time(i), w)) out.push_back(i);
  }
  return out;
}

void require_interval(TimeWindow w) {
  if (!(w.length() > 0.0)) fail(ErrorKind::range, "analysis interval must have positive length");
}

struct Peak {
  double value = -1.0;
  double radius = 0.0;
};

// max |u| over the origin and the grid radii; the first maximum wins.
Peak sup_with_radius(const RadialField& f) {
  Peak p{std::abs(origin_value(f)), 0.0};
  for (std::size_t i = 0; i < f.size(); ++i) {
    const double r = f.grid().radius(i);
    const double v = std::abs(f[i]) / r;
    if (v > p.value) p = {v, r};
  }
  return p;
}

double energy1(const RadialField& f) { return 0.5 * gradient_norm_sq(f) + lp_integral(f, 6.0) / 3.0; }
double energy2(const RadialField& f) { return 0.5 * second_moment_squared(f); }

}  // namespace

AnalysisConstants AnalysisConstants::from_config(const RunConfig& config) {
  return {config.eta1, config.eta2, config.eta3, config.c_eta1, config.c_det, config.c_eta12,
          config.persistence_constant()};
}

double AnalysisConstants::detection_threshold() const { return c_det * std::pow(eta1, 1.5); }

double AnalysisConstants::floor_frequency(double interval_length) const {
  return std::pow(eta1, 5) / std::sqrt(interval_length);
}

double AnalysisConstants::soliton_threshold(double interval_length) const {
  return c_eta1 / eta2 / std::sqrt(interval_length);
}

std::string to_string(BubbleClass c) { return c == BubbleClass::solitonlike ? "Solitonlike" : "Concentrating"; }

BubbleReport detect_bubble(const SnapshotStream& stream, TimeWindow interval, const AnalysisConstants& constants) {
  require_interval(interval);
  const auto idx = snapshots_in(stream, interval);
  if (idx.empty()) fail(ErrorKind::range, "no snapshot inside the analysis interval");

  BubbleReport report;
  report.interval = interval;
  report.N_j0 = constants.floor_frequency(interval.length());
  report.threshold = constants.detection_threshold();

  const MultiplierBank bank(stream.field(idx.front()).grid_ptr());
  std::vector<double> levels;
  for (double N : bank.frequencies()) {
    if (N >= report.N_j0) levels.push_back(N);
  }
  if (levels.empty()) {
    fail(ErrorKind::resolution, "no resolvable dyadic level at or above N_j0 = " + std::to_string(report.N_j0));
  }

  double best = -1.0;
  for (std::size_t i : idx) {
    const auto& u = stream.field(i);
    for (double N : levels) {
      const Peak p = sup_with_radius(lp_project(bank, u, N));
      const double sigma = p.value / std::sqrt(N);
      const bool better = sigma > best || (sigma == best && (p.radius < report.x_j ||
                                                             (p.radius == report.x_j && u.time() < report.t_j)));
      if (better) {
        best = sigma;
        report.snapshot = i;
        report.t_j = u.time();
        report.N_j = N;
        report.x_j = p.radius;
      }
    }
  }
  report.sigma_max = best;
  report.detected = best > 0.0 && best >= report.threshold;
  return report;
}

ConcentrationCheck verify_concentration(const RadialField& field, BubbleReport& report,
                                        const AnalysisConstants& constants) {
  ConcentrationCheck check;
  report.verified = false;
  if (!report.detected) return check;
  const double R = constants.c_eta1 / report.N_j;
  if (R > field.grid().r_max()) fail(ErrorKind::range, "concentration ball exceeds the grid");
  report.ball_radius = R;
  report.x_j_inside = report.x_j < R;
  report.conc6 = ball_lp_norm(field, 6.0, R);
  report.concGrad = ball_gradient_norm(field, R);
  report.conc2 = ball_lp_norm(field, 2.0, R);
  const double c = constants.detection_threshold();
  check.l6 = report.conc6 >= c;
  check.grad = report.concGrad >= c;
  check.l2 = report.conc2 >= c / report.N_j;
  report.verified = check.all();
  return check;
}

BubbleClass classify(const RadialField& field, BubbleReport& report, const AnalysisConstants& constants) {
  if (!report.detected) fail(ErrorKind::range, "classify needs a detected bubble");
  const double len = report.interval.length();
  report.soliton_threshold = constants.soliton_threshold(len);
  const auto cls = report.N_j <= report.soliton_threshold ? BubbleClass::solitonlike : BubbleClass::concentrating;
  report.classification = cls;
  if (cls == BubbleClass::concentrating) {
    report.inner_radius = std::min(constants.eta2 * std::sqrt(len) / std::numbers::sqrt2, field.grid().r_max());
    report.inner_grad = ball_gradient_norm(field, report.inner_radius);
    report.inner_grad_ok = report.inner_grad >= constants.detection_threshold();
  }
  return cls;
}

BubbleReport analyze_interval(const SnapshotStream& stream, TimeWindow interval, const AnalysisConstants& constants) {
  auto report = detect_bubble(stream, interval, constants);
  if (report.detected) {
    const auto& u = stream.field(report.snapshot);
    verify_concentration(u, report, constants);
    classify(u, report, constants);
  }
  return report;
}

std::vector<BubbleReport> analyze_intervals(const SnapshotStream& stream, const std::vector<Interval>& intervals,
                                            const AnalysisConstants& constants) {
  std::vector<std::future<BubbleReport>> jobs;
  for (const auto& iv : intervals) {
    jobs.push_back(std::async(std::launch::async, [&stream, &constants, w = TimeWindow{iv.begin, iv.end}] {
      return analyze_interval(stream, w, constants);
    }));
  }
  std::vector<BubbleReport> out;
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

PersistenceResult mass_persistence(const SnapshotStream& stream, const BubbleReport& report,
                                   const AnalysisConstants& constants) {
  PersistenceResult res;
  if (!report.detected || stream.empty()) return res;
  const double len = report.interval.length();
  const double r_max = stream.field(0).grid().r_max();
  res.radius = constants.c_eta12 * std::sqrt(len);
  if (res.radius > r_max) {
    res.radius = r_max;
    res.clamped = true;
  }
  res.threshold = constants.c_pers * std::sqrt(len);
  const auto idx = snapshots_in(stream, report.interval);
  if (idx.empty()) return res;
  res.min_mass = std::numeric_limits<double>::infinity();
  for (std::size_t i : idx) res.min_mass = std::min(res.min_mass, ball_lp_norm(stream.field(i), 2.0, res.radius));
  res.persists = res.min_mass >= res.threshold;
  return res;
}

double cut_gradient_l3() {
  static const double value = [] {
    // Simpson on [1, 2]; chi' vanishes with all derivatives at both ends.
    constexpr int m = 20000;
    const double h = 1.0 / m;
    double sum = 0.0;
    for (int i = 0; i <= m; ++i) {
      const double x = 1.0 + i * h;
      const double f = std::pow(std::abs(cutoff_derivative(x)), 3) * x * x;
      sum += (i == 0 || i == m ? 1.0 : (i % 2 ? 4.0 : 2.0)) * f;
    }
    return std::cbrt(4.0 * std::numbers::pi * sum * h / 3.0);
  }();
  return value;
}

BubbleRemoval remove_bubble_at(const RadialField& field, double radius) {
  const auto& grid = field.grid();
  if (!(radius >= 0.0)) fail(ErrorKind::range, "cut radius must be >= 0");
  if (2.0 * radius > grid.r_max()) fail(ErrorKind::range, "cut annulus exceeds the grid");

  RadialField v(field.grid_ptr(), field.time());
  RadialField w(field.grid_ptr(), field.time());
  for (std::size_t i = 0; i < field.size(); ++i) {
    const double phi = radius > 0.0 ? cutoff(grid.radius(i) / radius) : 0.0;
    v[i] = phi * field[i];
    w[i] = (1.0 - phi) * field[i];
  }

  BubbleRemoval out{std::move(v), std::move(w)};
  out.radius = radius;
  out.E1_u = energy1(field);
  out.E1_v = energy1(out.kept);
  out.E1_w = energy1(out.cut);
  out.E1_drop = out.E1_u - out.E1_w;
  out.E2_shift = energy2(out.cut) - energy2(field);
  out.reassembly_error = std::sqrt(mass_squared(out.kept + out.cut - field));
  if (radius > 0.0) {
    out.annulus_l6 = annulus_lp_norm(field, 6.0, radius, 2.0 * radius);
    out.grad_inside = ball_gradient_norm(field, radius);
    const double g3 = cut_gradient_l3();
    const double grad = std::sqrt(gradient_norm_sq(field));
    out.crossterm_bound = g3 * g3 * out.annulus_l6 * out.annulus_l6 + g3 * out.annulus_l6 * grad;
  }
  return out;
}

std::size_t select_annulus(const RadialField& field, double scale, double eta1) {
  if (!(scale > 0.0)) fail(ErrorKind::range, "annulus scale must be positive");
  const double r_max = field.grid().r_max();
  const double bound = std::pow(eta1, 4);
  for (std::size_t k = 1; 2.0 * k * scale <= r_max; ++k) {
    const double s = k * scale;
    if (annulus_lp_norm(field, 6.0, s, 2.0 * s) <= bound) return k;
  }
  fail(ErrorKind::annulus_search, "no annulus with L^6 norm <= eta1^4 inside the grid");
}

BubbleRemoval remove_bubble(const RadialField& field, const BubbleReport& report, const AnalysisConstants& constants) {
  const double scale = constants.eta2 * std::sqrt(report.interval.length());
  const std::size_t k = select_annulus(field, scale, constants.eta1);
  auto out = remove_bubble_at(field, k * scale);
  out.annulus = k;
  out.flagged = !(report.verified && report.classification == BubbleClass::concentrating);
  return out;
}

nlohmann::json to_json(const AnalysisConstants& c) {
  return {{"eta1", c.eta1},   {"eta2", c.eta2},       {"eta3", c.eta3},    {"c_eta1", c.c_eta1},
          {"c_det", c.c_det}, {"c_eta12", c.c_eta12}, {"c_pers", c.c_pers}};
}

nlohmann::json to_json(const BubbleReport& r, const AnalysisConstants& constants) {
  nlohmann::json doc = {{"interval", {r.interval.begin, r.interval.end}},
                        {"detected", r.detected},
                        {"t_j", r.t_j},
                        {"N_j", r.N_j},
                        {"x_j", r.x_j},
                        {"sigma_max", r.sigma_max},
                        {"N_j0", r.N_j0},
                        {"threshold", r.threshold},
                        {"ball_radius", r.ball_radius},
                        {"conc6", r.conc6},
                        {"concGrad", r.concGrad},
                        {"conc2", r.conc2},
                        {"verified", r.verified},
                        {"x_j_inside", r.x_j_inside},
                        {"classification", nullptr},
                        {"soliton_threshold", r.soliton_threshold},
                        {"constants", to_json(constants)}};
  if (r.classification) {
    doc["classification"] = to_string(*r.classification);
    if (*r.classification == BubbleClass::concentrating) {
      doc["inner_radius"] = r.inner_radius;
      doc["inner_grad"] = r.inner_grad;
      doc["inner_grad_ok"] = r.inner_grad_ok;
    }
  }
  return doc;
}

}  // namespace rnls
