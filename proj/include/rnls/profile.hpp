#pragma once

#include <string>

#include "rnls/field.hpp"

namespace rnls {

enum class ProfileKind { gaussian, bump, concentrate, zero };

/// Initial radial profile u0(r).
///   gaussian:    amplitude * exp(-r^2 / (2 width^2))
///   bump:        amplitude * [g(r - center) + g(r + center)], g a Gaussian of the
///                given width; the mirrored term keeps u0 smooth at the origin
///   concentrate: amplitude * sqrt(scale) * exp(-(scale r)^2 / 2), the H^1-critical
///                rescaling of a fixed Gaussian bump
///   zero:        u0 = 0
struct ProfileSpec {
  ProfileKind kind = ProfileKind::gaussian;
  double amplitude = 1.0;
  double width = 1.0;
  double center = 0.0;
  double scale = 1.0;

  static ProfileSpec gaussian(double amplitude, double width) {
    return {ProfileKind::gaussian, amplitude, width, 0.0, 1.0};
  }
  static ProfileSpec bump(double amplitude, double width, double center) {
    return {ProfileKind::bump, amplitude, width, center, 1.0};
  }
  static ProfileSpec concentrate(double scale, double amplitude = 1.0) {
    return {ProfileKind::concentrate, amplitude, 1.0, 0.0, scale};
  }
  static ProfileSpec zero() { return {ProfileKind::zero, 0.0, 1.0, 0.0, 1.0}; }

  double evaluate(double r) const noexcept;
};

std::string to_string(ProfileKind kind);
ProfileKind profile_kind_from_string(const std::string& name);

/// Samples w(r_i) = r_i u0(r_i) at time 0 and zeroes the Dirichlet sample at r_max.
/// Throws ErrorKind::truncation when the relative mass beyond 0.9 r_max exceeds
/// tail_threshold, ErrorKind::config for non-positive widths or scales.
RadialField sample_profile(const ProfileSpec& spec, const GridPtr& grid, double tail_threshold = 1e-6);

}  // namespace rnls
