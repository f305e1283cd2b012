#include "gridgeo/lr.hpp"

#include <cmath>

#include "gridgeo/types.hpp"

namespace gridgeo::lr {

void LRState::validate() const {
  if (r < 0.0 || L < 0.0)
    throw SingularInputError("LRState: r and L must be nonnegative");
  if (r == 0.0 && L == 0.0)
    throw SingularInputError("LRState: (r, L) = (0, 0) is singular");
  if (!(omega > 0.0)) throw SingularInputError("LRState: omega must be > 0");
}

double lr_power(const LRState& state) {
  state.validate();
  const double wl = state.omega * state.L;
  return state.r / (state.r * state.r + wl * wl);
}

namespace {

// Characteristic lengths of the denominator r^2 + (omega L)^2.
std::vector<double> lr_scales(double r, double L, double omega) {
  const double span = std::hypot(r, omega * L);
  return {std::max(span, std::abs(r)), std::max(span / omega, std::abs(L))};
}

}  // namespace

ScalarField lr_power_field(double omega) {
  ScalarField f;
  f.dim = 2;
  f.eval = [omega](std::span<const double> x) {
    const double r = x[0];
    const double wl = omega * x[1];
    return r / (r * r + wl * wl);
  };
  f.in_domain = [](std::span<const double> x) {
    return x[0] != 0.0 || x[1] != 0.0;
  };
  return f;
}

ScalarField lr_power_field_at(const LRState& state) {
  state.validate();
  ScalarField f = lr_power_field(state.omega);
  f.coord_scales = lr_scales(state.r, state.L, state.omega);
  return f;
}

MetricTensor lr_metric_closed(const LRState& state) {
  state.validate();
  const double r = state.r;
  const double w2 = state.omega * state.omega;
  const double L = state.L;
  const double den = std::pow(r * r + w2 * L * L, 3);
  const double shared = r * r - 3.0 * w2 * L * L;
  Eigen::MatrixXd g(2, 2);
  g(0, 0) = 2.0 * r * shared / den;
  g(0, 1) = g(1, 0) = 2.0 * w2 * L * (3.0 * r * r - w2 * L * L) / den;
  g(1, 1) = -2.0 * r * w2 * shared / den;
  return MetricTensor(std::move(g), {"r", "L"});
}

double lr_det(const LRState& state) {
  state.validate();
  const double w2 = state.omega * state.omega;
  const double den = state.r * state.r + w2 * state.L * state.L;
  return -4.0 * w2 / (den * den * den);
}

double lr_reliability_boundary(double r, double omega) {
  if (!(r > 0.0) || !(omega > 0.0))
    throw SingularInputError("lr_reliability_boundary: r and omega must be > 0");
  return r / (std::sqrt(3.0) * omega);
}

LRVerdict classify_lr(const LRState& state) {
  state.validate();
  const MetricTensor g = lr_metric_closed(state);
  LRVerdict v;
  v.g_rr = g(0, 0);
  v.g_rL = g(0, 1);
  v.g_LL = g(1, 1);
  v.det_g = g.det();
  v.boundary_residual =
      state.r * state.r - 3.0 * state.omega * state.omega * state.L * state.L;
  v.resistive_reliable = v.g_rr > 0.0;
  v.joint_reliable = v.det_g > 0.0;

  ScalarField field = lr_power_field(state.omega);
  field.coord_scales = lr_scales(state.r, state.L, state.omega);
  const double x[2] = {state.r, state.L};
  const CurvatureReport curv = ricci_scalar_2d(field, x);
  v.ricci_scalar = curv.ricci_scalar;
  v.ricci_scalar_scaled = curv.ricci_scalar_scaled;
  v.globally_reliable =
      curv.regular && curv.ricci_scalar_scaled < kFlatnessTolerance;
  return v;
}

const std::vector<PublishedLRRow>& published_table_1() {
  static const std::vector<PublishedLRRow> rows = {
      {"T1", 0.02, 0.60, -852772.88}, {"T2", 0.08, 0.24, -208.19},
      {"T3", 0.06, 0.18, -1169.78},   {"T4", 0.06, 0.68, -0.41},
      {"T5", 0.04, 0.12, -13324.57},  {"T6", 0.01, 0.03, -54577464.92},
      {"T7", 0.08, 0.024, -22377541.16},
  };
  return rows;
}

std::vector<TableRow> reproduce_table_1(double omega) {
  std::vector<TableRow> out;
  for (const auto& row : published_table_1()) {
    TableRow t;
    t.line_id = row.id;
    t.r = row.r;
    t.L = row.L;
    t.det_g = lr_det({row.r, row.L, omega});
    t.paper_value = row.printed_det;
    t.relative_error =
        std::abs(t.det_g - row.printed_det) / std::abs(row.printed_det);
    if (t.line_id == "T1") {
      // Printed -852772.88 matches L = 0.06, not the tabulated 0.60.
      const double corrected = lr_det({row.r, 0.06, omega});
      t.flagged = true;
      t.note = "erratum: printed value corresponds to L=0.06 (computed " +
               std::to_string(corrected) + ")";
    } else if (t.line_id == "T4") {
      // Printed -0.41 carries two significant digits; the computed value
      // rounds to it but cannot match at 0.5%.
      t.flagged = true;
      t.note = "erratum: printed value truncated to two decimals";
    }
    out.push_back(std::move(t));
  }
  return out;
}

}  // namespace gridgeo::lr
