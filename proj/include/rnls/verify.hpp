#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "rnls/config.hpp"
#include "rnls/stream.hpp"

namespace rnls {

enum class Suite { conservation, decay, morawetz, galilean, all };

std::string to_string(Suite s);
/// Throws ErrorKind::config for an unknown name.
Suite suite_from_string(const std::string& name);

/// One named invariant with its measured value and the bound it is held to.
struct Check {
  std::string suite;
  std::string name;
  double value = 0.0;
  double bound = 0.0;
  bool upper = true;  // pass iff value <= bound; otherwise value >= bound
  bool pass = false;
};

/// Runs the checks of a suite on a stream produced from config.
///   conservation: relative mass and energy drift
///   decay:        potential-energy margin, monotone calE1/calE2, identity residual, ||H(t)u|| bound
///   morawetz:     Hardy and Lipschitz local-mass ratios, Morawetz ratio finite
///   galilean:     direct vs factorized J/H, reconstruction, Heisenberg residuals, ||H(t)u|| bound
std::vector<Check> verify_suite(const RunConfig& config, const SnapshotStream& stream, Suite suite);

bool all_pass(const std::vector<Check>& checks);
nlohmann::json to_json(const std::vector<Check>& checks);

}  // namespace rnls
