#include "rnls/profile.hpp"

#include <cmath>

#include "rnls/error.hpp"
#include "rnls/norms.hpp"

namespace rnls {

double ProfileSpec::evaluate(double r) const noexcept {
  switch (kind) {
    case ProfileKind::gaussian:
      return amplitude * std::exp(-r * r / (2.0 * width * width));
    case ProfileKind::bump: {
      const double a = (r - center) / width;
      const double b = (r + center) / width;
      return amplitude * (std::exp(-0.5 * a * a) + std::exp(-0.5 * b * b));
    }
    case ProfileKind::concentrate: {
      const double x = scale * r;
      return amplitude * std::sqrt(scale) * std::exp(-0.5 * x * x);
    }
    case ProfileKind::zero:
      return 0.0;
  }
  return 0.0;
}

std::string to_string(ProfileKind kind) {
  switch (kind) {
    case ProfileKind::gaussian: return "gaussian";
    case ProfileKind::bump: return "bump";
    case ProfileKind::concentrate: return "concentrate";
    case ProfileKind::zero: return "zero";
  }
  return "zero";
}

ProfileKind profile_kind_from_string(const std::string& name) {
  if (name == "gaussian") return ProfileKind::gaussian;
  if (name == "bump") return ProfileKind::bump;
  if (name == "concentrate") return ProfileKind::concentrate;
  if (name == "zero") return ProfileKind::zero;
  fail(ErrorKind::config, "unknown profile kind '" + name + "'");
}

RadialField sample_profile(const ProfileSpec& spec, const GridPtr& grid, double tail_threshold) {
  if (spec.kind != ProfileKind::zero) {
    if (!(spec.width > 0.0) || !(spec.scale > 0.0)) fail(ErrorKind::config, "profile width and scale must be positive");
    if (spec.kind == ProfileKind::bump && !(spec.center >= 0.0)) fail(ErrorKind::config, "bump center must be >= 0");
    if (!std::isfinite(spec.amplitude)) fail(ErrorKind::config, "profile amplitude must be finite");
  }
  std::vector<Complex> w(grid->size());
  for (std::size_t i = 0; i + 1 < grid->size(); ++i) {
    const double r = grid->radius(i);
    w[i] = r * spec.evaluate(r);
  }
  RadialField field(grid, std::move(w), 0.0);
  const double tail = tail_mass_fraction(field);
  if (tail > tail_threshold) {
    fail(ErrorKind::truncation, "profile " + to_string(spec.kind) + " has tail mass fraction " + std::to_string(tail) +
                                    " above threshold " + std::to_string(tail_threshold));
  }
  return field;
}

}  // namespace rnls
