#include "rnls/error.hpp"

#include <sstream>

namespace rnls {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::config: return "config";
    case ErrorKind::truncation: return "truncation";
    case ErrorKind::range: return "range";
    case ErrorKind::kernel_resolution: return "kernel_resolution";
    case ErrorKind::resolution: return "resolution";
    case ErrorKind::undefined: return "undefined";
    case ErrorKind::annulus_search: return "annulus_search";
    case ErrorKind::io: return "io";
    case ErrorKind::integrity: return "integrity";
  }
  return "unknown";
}

namespace {
std::string truncation_message(double time, double tail_mass, double threshold) {
  std::ostringstream os;
  os.precision(6);
  os << "tail mass " << tail_mass << " exceeds threshold " << threshold << " at t = " << time;
  return os.str();
}
}  // namespace

TruncationError::TruncationError(double time, double tail_mass, double threshold)
    : Error(ErrorKind::truncation, truncation_message(time, tail_mass, threshold)),
      time_(time),
      tail_mass_(tail_mass) {}

}  // namespace rnls
