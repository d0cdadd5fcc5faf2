#include "rnls/sine_transform.hpp"

#include <fftw3.h>

#include <map>
#include <memory>
#include <mutex>
#include <numbers>

#include "rnls/error.hpp"

namespace rnls {

namespace {

// Plans transform the real and imaginary parts of interleaved complex data
// in one call. Planning is serialized; execution through fftw_execute_r2r is
// thread-safe, so plans are shared process-wide.
struct PlanPair {
  fftw_plan sine = nullptr;    // RODFT00 of length n - 1
  fftw_plan cosine = nullptr;  // REDFT00 of length n + 1
};

class PlanCache {
 public:
  static PlanCache& instance() {
    static PlanCache cache;
    return cache;
  }

  PlanPair get(std::size_t n) {
    std::lock_guard lock(mutex_);
    if (auto it = plans_.find(n); it != plans_.end()) return it->second;
    PlanPair pair;
    pair.sine = make(n - 1, FFTW_RODFT00);
    pair.cosine = make(n + 1, FFTW_REDFT00);
    plans_.emplace(n, pair);
    return pair;
  }

  PlanCache(const PlanCache&) = delete;
  PlanCache& operator=(const PlanCache&) = delete;

 private:
  PlanCache() = default;
  ~PlanCache() {
    for (auto& [n, pair] : plans_) {
      fftw_destroy_plan(pair.sine);
      fftw_destroy_plan(pair.cosine);
    }
  }

  static fftw_plan make(std::size_t length, fftw_r2r_kind kind) {
    std::vector<Complex> in(length), out(length);
    const int len = static_cast<int>(length);
    // FFTW_ESTIMATE keeps the chosen algorithm, and hence the rounding, reproducible.
    fftw_plan plan = fftw_plan_many_r2r(1, &len, 2, reinterpret_cast<double*>(in.data()), nullptr, 2, 1,
                                        reinterpret_cast<double*>(out.data()), nullptr, 2, 1, &kind,
                                        FFTW_ESTIMATE | FFTW_UNALIGNED);
    if (plan == nullptr) fail(ErrorKind::range, "FFTW planning failed");
    return plan;
  }

  std::mutex mutex_;
  std::map<std::size_t, PlanPair> plans_;
};

void execute(fftw_plan plan, std::span<const Complex> in, std::span<Complex> out) {
  fftw_execute_r2r(plan, const_cast<double*>(reinterpret_cast<const double*>(in.data())),
                   reinterpret_cast<double*>(out.data()));
}

}  // namespace

void sine_transform_raw(std::span<const Complex> in, std::span<Complex> out) {
  const std::size_t n = in.size();
  if (out.size() != n || n < 2) fail(ErrorKind::range, "sine transform buffers must share length n >= 2");
  execute(PlanCache::instance().get(n).sine, in.first(n - 1), out.first(n - 1));
  out[n - 1] = 0.0;
}

std::vector<Complex> dst_forward(const RadialField& field) {
  const std::size_t n = field.size();
  std::vector<Complex> coeffs(n);
  execute(PlanCache::instance().get(n).sine, field.values().first(n - 1), std::span(coeffs).first(n - 1));
  return coeffs;
}

RadialField dst_backward(std::span<const Complex> coeffs, GridPtr grid, double time) {
  const std::size_t n = grid->size();
  if (coeffs.size() != n) fail(ErrorKind::range, "coefficient length does not match grid");
  std::vector<Complex> w(n);
  execute(PlanCache::instance().get(n).sine, coeffs.first(n - 1), std::span(w).first(n - 1));
  const double scale = 1.0 / (2.0 * static_cast<double>(n));
  for (std::size_t i = 0; i + 1 < n; ++i) w[i] *= scale;
  return RadialField(std::move(grid), std::move(w), time);
}

std::vector<Complex> radial_derivative(const RadialField& field) {
  const auto& grid = field.grid();
  const std::size_t n = grid.size();
  const auto coeffs = dst_forward(field);
  // REDFT00: Y_i = X_0 + (-1)^i X_n + 2 sum_{m=1}^{n-1} X_m cos(pi m i / n)
  std::vector<Complex> half(n + 1);
  const double inv_n = 1.0 / static_cast<double>(n);
  for (std::size_t m = 1; m < n; ++m) half[m] = 0.5 * coeffs[m - 1] * inv_n * grid.wavenumber(m - 1);
  std::vector<Complex> dw(n + 1);
  execute(PlanCache::instance().get(n).cosine, half, dw);
  return dw;
}

Complex origin_value(const RadialField& field) {
  const auto& grid = field.grid();
  const auto coeffs = dst_forward(field);
  Complex sum{};
  for (std::size_t m = 0; m + 1 < grid.size(); ++m) sum += coeffs[m] * grid.wavenumber(m);
  return sum / static_cast<double>(grid.size());
}

double gradient_norm_sq(const RadialField& field) {
  const auto& grid = field.grid();
  const auto coeffs = dst_forward(field);
  double sum = 0.0;
  for (std::size_t m = 0; m + 1 < grid.size(); ++m) {
    const double k = grid.wavenumber(m);
    sum += k * k * std::norm(coeffs[m]);
  }
  return 4.0 * std::numbers::pi * grid.dr() * sum / (2.0 * static_cast<double>(grid.size()));
}

RadialField apply_multiplier(const RadialField& field, std::span<const double> multiplier) {
  if (multiplier.size() != field.size()) fail(ErrorKind::range, "multiplier length does not match grid");
  auto coeffs = dst_forward(field);
  for (std::size_t m = 0; m < coeffs.size(); ++m) coeffs[m] *= multiplier[m];
  return dst_backward(coeffs, field.grid_ptr(), field.time());
}

}  // namespace rnls
