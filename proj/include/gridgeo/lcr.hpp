#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gridgeo/curvature.hpp"
#include "gridgeo/field.hpp"
#include "gridgeo/metric.hpp"

namespace gridgeo::lcr {

/// State of an RLC line in per-unit (r, L, C) with AC base frequency omega.
struct LCRState {
  double r = 0.0;
  double L = 0.0;
  double C = 0.0;
  double omega = 1.0;

  /// Net reactance X = omega L - 1/(omega C).
  double reactance() const { return omega * L - 1.0 / (omega * C); }

  void validate() const;
};

/// Voltage-stability verdict for an RLC line; metric order is (L, C, r).
struct LCRVerdict {
  MetricTensor metric;
  double p2_surface = 0.0;
  double det_g = 0.0;
  double ricci_scalar = 0.0;
  bool surface_stable = false;   ///< p2_surface > 0
  bool volume_stable = false;    ///< det_g > 0
  bool globally_stable = false;  ///< curvature finite and below blow-up
  bool singular = false;         ///< metric below degeneracy threshold
};

/// Blow-up threshold on |R| for globally_stable.
inline constexpr double kBlowupThreshold = 1e6;

/// Total effective power S = (r + X) / (r^2 + X^2), X = omega L - 1/(omega C).
double lcr_effective_power(const LCRState& state);

/// Same field in the impedance basis, S(r, X_L, X_C) of independent
/// coordinates (r, X_L, X_C).
double lcr_effective_power_impedance(double r, double X_L, double X_C);

/// The power as a scalar field over coordinates (L, C, r) at fixed omega,
/// with scale hints sized to the local reactance.
ScalarField lcr_power_field(double omega);

/// Finite-difference Hessian of the effective power in order (L, C, r);
/// the authoritative metric for all classification.
MetricTensor lcr_metric_oracle(const LCRState& state);

/// The oracle as a metric field with direct third/fourth-derivative
/// providers (used for scalar curvature).
MetricField lcr_oracle_metric_field(double omega);

/// The published closed-form metric, evaluated verbatim, in order
/// (L, C, r). Reconciliation-only: never consumed by classification.
MetricTensor lcr_metric_closed(const LCRState& state);

/// The closed-form matrix as a metric field (used to trace where the
/// published limiting formulas come from).
MetricField lcr_closed_metric_field(double omega);

/// Leading (L, C) 2x2 minor of the oracle metric.
double lc_surface_minor(const LCRState& state);

/// Full determinant of the oracle metric.
double lcr_det(const LCRState& state);

/// Published limiting determinant at L = 0, r = 0: 8 (1 - 3 w^2 C^2) w^7 C^3.
double published_limit_det(double omega, double C);

/// Published limiting curvature at L = 0, r = 0:
/// (-6 + 25 w^2 C^2 - 51 w^4 C^4) / (2 (1 - 3 w^2 C^2)^2 w C).
double published_limit_ricci(double omega, double C);

/// 3-D Ricci scalar of the oracle metric at the state.
CurvatureReport lcr_scalar_curvature(const LCRState& state);

LCRVerdict classify_lcr(const LCRState& state);

/// One entry of the closed-form-vs-oracle reconciliation report.
struct ReconciliationEntry {
  std::string component;  ///< e.g. "g_LL"
  double closed = 0.0;
  double oracle = 0.0;
  double relative_error = 0.0;
  bool agrees = false;  ///< within tolerance
};

struct ReconciliationReport {
  LCRState state;
  std::vector<ReconciliationEntry> entries;
  bool all_agree = false;
};

/// Entry-by-entry comparison of the closed form against the oracle,
/// flagging entries that disagree by more than `tolerance` relative.
ReconciliationReport reconcile_closed_form(const LCRState& state,
                                           double tolerance = 1e-4);

/// One cell of a sweep grid.
struct GridCell {
  double L = 0.0;
  double C = 0.0;
  double p2 = 0.0;
  double det_g = 0.0;
  double ricci = 0.0;
  bool surface_stable = false;
  bool volume_stable = false;
  bool globally_stable = false;
  bool singular = false;
};

struct GridSpec {
  double start = 0.0;
  double stop = 0.0;
  int count = 0;

  double at(int i) const;
};

/// Deterministic L-major sweep over (L, C) at fixed r, omega. Singular
/// cells carry the singular flag instead of throwing.
std::vector<GridCell> sweep_grid(double r, const GridSpec& L_range,
                                 const GridSpec& C_range, double omega);

/// CSV rendering with the fixed column contract
/// L,C,P2,det_g,R,surface_stable,volume_stable,globally_stable,singular_flag.
std::string grid_csv(const std::vector<GridCell>& grid);

/// Maximal C-interval (1e-3-resolution scan over (0, 1]) where surface,
/// volume and global stability all hold; empty optional when no scanned C
/// qualifies.
struct CInterval {
  double lo = 0.0;
  double hi = 0.0;
};
std::optional<CInterval> recommend_capacitor_range(double r, double L,
                                                   double omega);

}  // namespace gridgeo::lcr
