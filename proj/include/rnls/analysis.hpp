#pragma once

#include <optional>
#include <vector>

#include <json.hpp>

#include "rnls/config.hpp"
#include "rnls/diagnostics.hpp"
#include "rnls/stream.hpp"

namespace rnls {

/// Constants of the concentration machinery. Defaults follow RunConfig.
struct AnalysisConstants {
  double eta1 = 0.5;
  double eta2 = 0.0625;
  double eta3 = 0.03125;
  double c_eta1 = 4.0;
  double c_det = 0.1;
  double c_eta12 = 8.0;
  double c_pers = 0.05 * 0.35355339059327373 * 0.0625;

  static AnalysisConstants from_config(const RunConfig& config);

  /// c_det * eta1^{3/2}.
  double detection_threshold() const;
  /// |I|^{-1/2} eta1^5.
  double floor_frequency(double interval_length) const;
  /// (C_eta1 / eta2) |I|^{-1/2}.
  double soliton_threshold(double interval_length) const;
};

enum class BubbleClass { solitonlike, concentrating };

std::string to_string(BubbleClass c);

struct BubbleReport {
  TimeWindow interval;
  bool detected = false;
  std::size_t snapshot = 0;  // index of t_j in the stream
  double t_j = 0.0;
  double N_j = 0.0;
  double x_j = 0.0;
  double sigma_max = 0.0;  // N_j^{-1/2} ||P_{N_j} u(t_j)||_inf
  double N_j0 = 0.0;
  double threshold = 0.0;  // detection threshold used

  // Filled by verify_concentration.
  double ball_radius = 0.0;  // C_eta1 / N_j
  double conc6 = 0.0;
  double concGrad = 0.0;
  double conc2 = 0.0;
  bool verified = false;
  bool x_j_inside = false;  // x_j < C_eta1 / N_j

  // Filled by classify.
  std::optional<BubbleClass> classification;
  double soliton_threshold = 0.0;
  double inner_radius = 0.0;  // eta2 |I|^{1/2} / sqrt 2
  double inner_grad = 0.0;
  bool inner_grad_ok = false;
};

/// Scans the snapshots inside interval and the resolvable levels N >= N_j0 for
/// the largest sigma_N. Ties go to the smallest radius, then the earliest time.
/// Sub-threshold maxima give a report with detected = false.
/// Throws ErrorKind::range for an empty interval, ErrorKind::resolution when no
/// level reaches N_j0.
BubbleReport detect_bubble(const SnapshotStream& stream, TimeWindow interval, const AnalysisConstants& constants);

struct ConcentrationCheck {
  bool l6 = false;
  bool grad = false;
  bool l2 = false;
  bool all() const noexcept { return l6 && grad && l2; }
};

/// Ball norms of field on |x| < C_eta1 / N_j against c_det eta1^{3/2}
/// (times 1/N_j for L^2). Writes the norms into report. A report without a
/// bubble yields all false. Throws ErrorKind::range when the ball leaves the grid.
ConcentrationCheck verify_concentration(const RadialField& field, BubbleReport& report,
                                        const AnalysisConstants& constants);

/// Solitonlike iff N_j <= (C_eta1 / eta2)|I|^{-1/2}. Concentrating reports also
/// get the gradient mass in |x| < eta2 |I|^{1/2} / sqrt 2 (clamped to the grid).
/// Throws ErrorKind::range for a report without a bubble.
BubbleClass classify(const RadialField& field, BubbleReport& report, const AnalysisConstants& constants);

/// Detection, verification and classification on one interval.
BubbleReport analyze_interval(const SnapshotStream& stream, TimeWindow interval, const AnalysisConstants& constants);
/// analyze_interval over every interval, concurrently.
std::vector<BubbleReport> analyze_intervals(const SnapshotStream& stream, const std::vector<Interval>& intervals,
                                            const AnalysisConstants& constants);

struct PersistenceResult {
  bool persists = false;
  double radius = 0.0;  // C_eta12 |I|^{1/2}, clamped to r_max
  bool clamped = false;
  double threshold = 0.0;  // c_pers |I|^{1/2}
  double min_mass = 0.0;
};

/// ||u(t)||_{L^2(|x| <= radius)} >= c_pers |I|^{1/2} at every snapshot in the interval.
/// False without a bubble.
PersistenceResult mass_persistence(const SnapshotStream& stream, const BubbleReport& report,
                                   const AnalysisConstants& constants);

/// (4 pi int_1^2 |chi'(x)|^3 x^2 dx)^{1/3} = ||grad phi||_3 for every cut scale.
double cut_gradient_l3();

struct BubbleRemoval {
  RadialField kept;  // v = phi u
  RadialField cut;   // w = (1 - phi) u
  double radius = 0.0;   // phi = chi(|x| / radius)
  std::size_t annulus = 0;  // selected N' (0 when the radius was given)
  double annulus_l6 = 0.0;  // ||u||_{L^6(radius <= |x| <= 2 radius)}
  double E1_u = 0.0;
  double E1_v = 0.0;
  double E1_w = 0.0;
  double E1_drop = 0.0;   // E1(u) - E1(w)
  double E2_shift = 0.0;  // E2(w) - E2(u)
  double crossterm_bound = 0.0;
  double grad_inside = 0.0;  // ||grad u||_{L^2(|x| < radius)}
  double reassembly_error = 0.0;  // ||v + w - u||_2
  bool flagged = false;  // the report is not a verified Concentrating bubble

  /// E1(v) + E1(w) - E1(u) - crossterm_bound; <= 0 when the audit holds.
  double superadditivity_excess() const noexcept { return E1_v + E1_w - E1_u - crossterm_bound; }
  /// grad_inside^2 / 2 - crossterm_bound - E1_drop; <= 0 when the audit holds.
  double drop_deficit() const noexcept { return 0.5 * grad_inside * grad_inside - crossterm_bound - E1_drop; }
};

/// Cuts at the given radius. radius = 0 means phi = 0.
/// Throws ErrorKind::range when 2 * radius exceeds r_max.
BubbleRemoval remove_bubble_at(const RadialField& field, double radius);

/// First N' = 1, 2, ... with ||u||_{L^6(N's <= |x| <= 2N's)} <= eta1^4,
/// s = eta2 |I|^{1/2}. Throws ErrorKind::annulus_search when 2N's passes r_max first.
std::size_t select_annulus(const RadialField& field, double scale, double eta1);

/// Removes the bubble of report from field at the radius chosen by select_annulus.
BubbleRemoval remove_bubble(const RadialField& field, const BubbleReport& report, const AnalysisConstants& constants);

nlohmann::json to_json(const BubbleReport& report, const AnalysisConstants& constants);
nlohmann::json to_json(const AnalysisConstants& constants);

}  // namespace rnls
