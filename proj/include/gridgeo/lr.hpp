#pragma once

#include <string>
#include <vector>

#include "gridgeo/curvature.hpp"
#include "gridgeo/field.hpp"
#include "gridgeo/metric.hpp"

namespace gridgeo::lr {

/// State of an LR line in per-unit (r, L) with AC base frequency omega.
struct LRState {
  double r = 0.0;
  double L = 0.0;
  double omega = 1.0;

  void validate() const;
};

/// Reliability verdict for an LR line with the supporting numbers.
struct LRVerdict {
  double g_rr = 0.0;
  double g_rL = 0.0;
  double g_LL = 0.0;
  double det_g = 0.0;
  double boundary_residual = 0.0;  ///< r^2 - 3 omega^2 L^2
  double ricci_scalar = 0.0;
  double ricci_scalar_scaled = 0.0;
  bool resistive_reliable = false;  ///< g_rr > 0
  bool joint_reliable = false;      ///< det_g > 0
  bool globally_reliable = false;   ///< curvature regular and ~ 0
};

/// Effective real power P(r, L) = r / (r^2 + omega^2 L^2).
double lr_power(const LRState& state);

/// The power field as a scalar field over coordinates (r, L).
ScalarField lr_power_field(double omega);

/// Same field with per-coordinate step-scale hints sized to the state's
/// neighborhood (the denominator's characteristic lengths).
ScalarField lr_power_field_at(const LRState& state);

/// Closed-form Hessian metric in coordinate order (r, L).
MetricTensor lr_metric_closed(const LRState& state);

/// Closed-form determinant -4 omega^2 / (r^2 + omega^2 L^2)^3.
double lr_det(const LRState& state);

/// L on the reliability boundary r^2 = 3 omega^2 L^2, i.e. r / (sqrt(3) omega).
double lr_reliability_boundary(double r, double omega);

/// Flatness tolerance on the scaled Ricci scalar for globally_reliable.
inline constexpr double kFlatnessTolerance = 1e-6;

LRVerdict classify_lr(const LRState& state);

/// One row of the table-reproduction report.
struct TableRow {
  std::string line_id;
  double r = 0.0;
  double L = 0.0;
  double det_g = 0.0;
  double paper_value = 0.0;
  double relative_error = 0.0;
  bool flagged = false;  ///< known erratum in the printed table
  std::string note;
};

/// The seven published (r, L) rows with printed Det(g) values.
struct PublishedLRRow {
  const char* id;
  double r;
  double L;
  double printed_det;
};
const std::vector<PublishedLRRow>& published_table_1();

/// Evaluates lr_det on all published rows at the given omega and compares
/// against the printed column. Rows 1 and 4 carry errata notes: row 1's
/// printed value corresponds to L = 0.06 (not 0.60), and row 4's -0.41 is
/// printed with too few digits to meet a 0.5% comparison.
std::vector<TableRow> reproduce_table_1(double omega);

}  // namespace gridgeo::lr
