#include "rnls/stream.hpp"

#include <cmath>
#include <string>

#include "rnls/error.hpp"

namespace rnls {

SnapshotStream::SnapshotStream(double dt, std::size_t stride) : dt_(dt), stride_(stride) {
  if (!std::isfinite(dt) || dt == 0.0) fail(ErrorKind::config, "stream dt must be finite and nonzero");
  if (stride == 0) fail(ErrorKind::config, "stream stride must be >= 1");
}

SnapshotStream SnapshotStream::from_fields(std::vector<RadialField> fields, double spacing) {
  SnapshotStream s(spacing, 1);
  const double t0 = fields.empty() ? 0.0 : fields.front().time();
  for (std::size_t i = 0; i < fields.size(); ++i) {
    fields[i].set_time(t0 + static_cast<double>(i) * spacing);
    s.push(std::move(fields[i]), i);
  }
  return s;
}

void SnapshotStream::push(RadialField field, std::size_t step) {
  if (!fields_.empty()) {
    require_same_grid(fields_.front(), field);
    if (step != steps_.back() + stride_) {
      fail(ErrorKind::range, "snapshot step " + std::to_string(step) + " does not follow " +
                                 std::to_string(steps_.back()) + " by the stride");
    }
    const double expected = fields_.front().time() + static_cast<double>(step - steps_.front()) * dt_;
    if (std::abs(field.time() - expected) > 1e-9 * std::max(1.0, std::abs(expected))) {
      fail(ErrorKind::range, "snapshot time is off the step lattice");
    }
  }
  ledgers_.push_back(rnls::ledger(field));
  fields_.push_back(std::move(field));
  steps_.push_back(step);
}

std::vector<double> SnapshotStream::times() const {
  std::vector<double> t;
  t.reserve(fields_.size());
  for (const auto& f : fields_) t.push_back(f.time());
  return t;
}

std::vector<double> SnapshotStream::tail_trace() const {
  std::vector<double> t;
  t.reserve(ledgers_.size());
  for (const auto& l : ledgers_) t.push_back(l.tail_mass);
  return t;
}

}  // namespace rnls
