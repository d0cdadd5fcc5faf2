#pragma once

#include <cstddef>
#include <filesystem>
#include <string>

#include <json.hpp>

#include "rnls/profile.hpp"

namespace rnls {

/// Operator splitting of the evolver.
///   exact_linear: the quadratic part uses the exact factorization
///                 e^{i tanh(dt/2) r^2/2} e^{-i sinh(dt) k^2/2} e^{i tanh(dt/2) r^2/2}
///   strang:       plain half/full/half phases with dt/2, dt, dt/2
enum class Splitting { exact_linear, strang };

std::string to_string(Splitting s);
Splitting splitting_from_string(const std::string& name);

struct RunConfig {
  double r_max = 16.0;
  std::size_t n = 1024;
  double dt = 1e-3;
  double t_end = 2.0;
  ProfileSpec profile = ProfileSpec::gaussian(1.0, 1.0);
  std::size_t snapshot_stride = 10;
  double tail_mass_threshold = 1e-6;
  double eta1 = 0.5;
  double eta2 = 0.0625;
  double eta3 = 0.03125;
  double c_eta1 = 4.0;
  double eps_small = 0.5;
  Splitting splitting = Splitting::exact_linear;
  double c_det = 0.1;
  double c_eta12 = 8.0;
  /// Mass-persistence constant; negative means 0.05 eta1^{3/2} eta2.
  double c_pers = -1.0;

  double persistence_constant() const;
  /// Number of dt steps to t_end.
  std::size_t steps() const;

  /// Throws ErrorKind::config on any violated invariant.
  void validate() const;
};

nlohmann::json to_json(const RunConfig& config);
/// Missing keys take defaults; unknown keys are rejected. Validates the result.
RunConfig config_from_json(const nlohmann::json& doc);
/// Throws ErrorKind::io when unreadable, ErrorKind::config when malformed.
RunConfig load_config(const std::filesystem::path& path);

}  // namespace rnls
