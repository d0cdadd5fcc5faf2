#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rnls {

/// Failure classes surfaced to callers and mapped onto CLI exit codes.
enum class ErrorKind {
  config,            // invalid grid, profile or run parameters
  truncation,        // tail mass crossed the configured threshold
  range,             // argument outside the resolvable or admissible range
  kernel_resolution, // Mehler kernel chirp not resolvable on the grid
  resolution,        // no dyadic level available above the frequency floor
  undefined,         // ratio with a vanishing denominator
  annulus_search,    // no annulus passed the smallness test
  io,                // filesystem or parse failure
  integrity,         // checksum mismatch in a run directory
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Raised by the evolver when the tail guard trips; carries the offending time.
class TruncationError : public Error {
 public:
  TruncationError(double time, double tail_mass, double threshold);
  double time() const noexcept { return time_; }
  double tail_mass() const noexcept { return tail_mass_; }

 private:
  double time_;
  double tail_mass_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace rnls
