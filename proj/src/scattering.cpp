#include "rnls/scattering.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <string>

#include "rnls/diagnostics.hpp"
#include "rnls/error.hpp"
#include "rnls/evolver.hpp"
#include "rnls/ledger.hpp"
#include "rnls/linear_flow.hpp"
#include "rnls/norms.hpp"
#include "rnls/profile.hpp"
#include "rnls/sine_transform.hpp"

namespace rnls {

namespace {

std::size_t snapshot_at(const SnapshotStream& stream, double t) {
  const double tol = 1e-9 * std::max(1.0, std::abs(t));
  for (std::size_t i = 0; i < stream.size(); ++i) {
    if (std::abs(stream.time(i) - t) <= tol) return i;
  }
  fail(ErrorKind::range, "no snapshot at t = " + std::to_string(t));
}

ScatteringState extract(const SnapshotStream& stream, const std::vector<double>& samples) {
  ScatteringState out{false, RadialField(stream.field(0).grid_ptr()), 0.0, cauchy_trace(stream, samples)};
  out.state = pullback(stream.field(snapshot_at(stream, samples.back())), stream.dt()).state;
  out.residual = out.trace.final_residual();
  out.scattered = out.trace.converged;
  return out;
}

}  // namespace

InteractionState pullback(const RadialField& field, double dt, double tail_threshold) {
  const double t = field.time();
  InteractionState out{field, t};
  if (t != 0.0 && !field.is_zero()) {
    out.state = linear_flow(field, -t, std::abs(dt), Splitting::exact_linear, tail_threshold);
  }
  out.state.set_time(0.0);
  return out;
}

CauchyTrace cauchy_trace(const SnapshotStream& stream, const std::vector<double>& samples, double floor) {
  if (samples.size() < 2) fail(ErrorKind::range, "cauchy trace needs at least two sample times");
  CauchyTrace tr;
  tr.times = samples;
  tr.floor = floor;
  RadialField prev = pullback(stream.field(snapshot_at(stream, samples.front())), stream.dt()).state;
  for (std::size_t k = 1; k < samples.size(); ++k) {
    RadialField cur = pullback(stream.field(snapshot_at(stream, samples[k])), stream.dt()).state;
    tr.d.push_back(sigma_norm(cur - prev));
    prev = std::move(cur);
  }
  tr.below_floor = std::all_of(tr.d.begin(), tr.d.end(), [&](double d) { return d <= floor; });
  tr.monotone = true;
  for (std::size_t k = 1; k < tr.d.size(); ++k) tr.monotone = tr.monotone && tr.d[k] <= tr.d[k - 1];
  if (tr.d.size() >= 6) {
    tr.ratio_test = true;
    for (std::size_t k = tr.d.size() - 5; k < tr.d.size(); ++k) {
      tr.ratio_test = tr.ratio_test && tr.d[k - 1] > 0.0 && tr.d[k] / tr.d[k - 1] < 0.9;
    }
  }
  tr.converged = tr.below_floor || (tr.monotone && tr.ratio_test);
  return tr;
}

std::vector<double> sample_times(const SnapshotStream& stream, double begin, double spacing) {
  if (stream.empty()) fail(ErrorKind::range, "empty snapshot stream");
  if (!(spacing > 0.0)) fail(ErrorKind::range, "sample spacing must be positive");
  const double h = std::abs(stream.spacing());
  const auto every = std::max<std::size_t>(1, static_cast<std::size_t>(std::llround(spacing / h)));
  const bool forward = stream.dt() > 0.0;
  std::size_t first = stream.size();
  for (std::size_t i = 0; i < stream.size(); ++i) {
    const double t = stream.time(i);
    if (forward ? t >= begin - 1e-12 : t <= begin + 1e-12) {
      first = i;
      break;
    }
  }
  std::vector<double> out;
  for (std::size_t i = first; i < stream.size(); i += every) out.push_back(stream.time(i));
  return out;
}

ScatteringState extract_uplus(const SnapshotStream& stream, const std::vector<double>& samples) {
  if (stream.empty() || stream.dt() < 0.0) fail(ErrorKind::range, "u_+ needs a forward stream");
  return extract(stream, samples);
}

ScatteringState extract_uminus(const SnapshotStream& stream, const std::vector<double>& samples) {
  if (stream.empty() || stream.dt() > 0.0) fail(ErrorKind::range, "u_- needs a backward stream");
  return extract(stream, samples);
}

double fit_exponent(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size()) fail(ErrorKind::range, "fit series lengths differ");
  std::vector<double> lx, ly;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] > 0.0 && y[i] > 0.0) {
      lx.push_back(std::log(x[i]));
      ly.push_back(std::log(y[i]));
    }
  }
  if (lx.size() < 2) fail(ErrorKind::undefined, "exponent fit needs two positive points");
  const double n = static_cast<double>(lx.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) mx += lx[i] / n, my += ly[i] / n;
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    sxy += (lx[i] - mx) * (ly[i] - my);
    sxx += (lx[i] - mx) * (lx[i] - mx);
  }
  if (sxx == 0.0) fail(ErrorKind::undefined, "exponent fit needs distinct abscissae");
  return sxy / sxx;
}

SmallDataReport small_data_experiment(const RunConfig& config, const std::vector<double>& eps_grid,
                                      double sample_spacing) {
  config.validate();
  const auto grid = make_grid(config.r_max, config.n);
  auto shape = config.profile;
  shape.amplitude = 1.0;
  const auto unit = sample_profile(shape, grid, config.tail_mass_threshold);
  const double unit_grad = std::sqrt(gradient_norm_sq(unit));
  if (!(unit_grad > 0.0)) fail(ErrorKind::config, "profile shape has no gradient to normalize");

  auto run = [&](double eps) {
    const double amplitude = eps / unit_grad;
    const RadialField initial = amplitude * unit;
    const double horizon = eps > 0.0 ? decay_horizon(ledger(initial).E1, config.eps_small) : 0.0;
    const double block = config.dt * static_cast<double>(config.snapshot_stride);
    const double t_end = std::ceil((horizon + 2.0) / block - 1e-9) * block;
    EvolveOptions opt;
    opt.dt = config.dt;
    opt.duration = t_end;
    opt.stride = config.snapshot_stride;
    opt.tail_threshold = config.tail_mass_threshold;
    opt.splitting = config.splitting;
    const auto stream = evolve(initial, opt);
    const double l10 = spacetime_norm(stream, {0.0, t_end}, 10.0, 10.0);
    auto scat = extract_uplus(stream, sample_times(stream, horizon, sample_spacing));
    const double m0 = std::sqrt(mass_squared(initial));
    const double mp = std::sqrt(mass_squared(scat.state));
    const double drift = m0 > 0.0 ? std::abs(mp - m0) / m0 : mp;
    return SmallDataRun{eps, amplitude, horizon, t_end, l10, drift, std::move(scat), initial};
  };

  std::vector<std::future<SmallDataRun>> jobs;
  for (double eps : eps_grid) {
    if (!(eps >= 0.0)) fail(ErrorKind::config, "eps must be >= 0");
    jobs.push_back(std::async(std::launch::async, run, eps));
  }
  SmallDataReport rep;
  std::vector<double> xs, ys;
  for (auto& j : jobs) {
    rep.runs.push_back(j.get());
    const auto& r = rep.runs.back();
    xs.push_back(r.eps);
    ys.push_back(r.l10);
    rep.max_residual = std::max(rep.max_residual, r.scattering.residual);
  }
  if (std::count_if(xs.begin(), xs.end(), [](double e) { return e > 0.0; }) >= 2) {
    rep.fit_exponent = fit_exponent(xs, ys);
    rep.exponent_ok = rep.fit_exponent >= 0.9 && rep.fit_exponent <= 1.1;
  }
  return rep;
}

nlohmann::json to_json(const CauchyTrace& tr) {
  return {{"times", tr.times},           {"d", tr.d},         {"monotone", tr.monotone},
          {"ratio_test", tr.ratio_test}, {"below_floor", tr.below_floor},
          {"floor", tr.floor},           {"converged", tr.converged}};
}

nlohmann::json to_json(const SmallDataReport& rep) {
  nlohmann::json runs = nlohmann::json::array();
  for (const auto& r : rep.runs) {
    runs.push_back({{"eps", r.eps},
                    {"amplitude", r.amplitude},
                    {"T0", r.horizon},
                    {"t_end", r.t_end},
                    {"l10", r.l10},
                    {"mass_drift", r.mass_drift},
                    {"scattered", r.scattering.scattered},
                    {"residual", r.scattering.residual},
                    {"trace", to_json(r.scattering.trace)}});
  }
  return {{"runs", runs},
          {"fit_exponent", rep.fit_exponent},
          {"exponent_ok", rep.exponent_ok},
          {"max_residual", rep.max_residual}};
}

}  // namespace rnls
