#pragma once

#include <cstddef>
#include <vector>

#include "rnls/field.hpp"
#include "rnls/ledger.hpp"

namespace rnls {

/// Snapshots of one trajectory at times t0 + step * dt, step a multiple of the
/// stride. dt is signed: backward runs carry dt < 0 and decreasing times.
class SnapshotStream {
 public:
  SnapshotStream(double dt, std::size_t stride);

  /// Frozen or synthetic trajectory: the given fields at times t0 + i * spacing.
  static SnapshotStream from_fields(std::vector<RadialField> fields, double spacing);

  /// Appends a snapshot and its ledger. The field time must equal
  /// t0 + step * dt and step must advance by exactly the stride.
  void push(RadialField field, std::size_t step);

  std::size_t size() const noexcept { return fields_.size(); }
  bool empty() const noexcept { return fields_.empty(); }
  double dt() const noexcept { return dt_; }
  std::size_t stride() const noexcept { return stride_; }
  /// Steps taken up to the last snapshot.
  std::size_t step_count() const noexcept { return steps_.empty() ? 0 : steps_.back(); }
  /// Signed time between consecutive snapshots.
  double spacing() const noexcept { return dt_ * static_cast<double>(stride_); }

  const RadialField& field(std::size_t i) const { return fields_.at(i); }
  double time(std::size_t i) const { return fields_.at(i).time(); }
  std::size_t step(std::size_t i) const { return steps_.at(i); }
  double tail_mass(std::size_t i) const { return ledgers_.at(i).tail_mass; }
  const EnergyLedger& ledger(std::size_t i) const { return ledgers_.at(i); }

  const std::vector<RadialField>& fields() const noexcept { return fields_; }
  const std::vector<EnergyLedger>& ledgers() const noexcept { return ledgers_; }
  std::vector<double> times() const;
  std::vector<double> tail_trace() const;

 private:
  double dt_;
  std::size_t stride_;
  std::vector<RadialField> fields_;
  std::vector<std::size_t> steps_;
  std::vector<EnergyLedger> ledgers_;
};

}  // namespace rnls
